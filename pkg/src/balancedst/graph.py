"""Directed graphs, their undirected view with traversal weights, and walks.

A traversal u -> v of an undirected-view edge is classified by which directed
edges exist in the underlying digraph:

* ``NEUTRAL``  -- both (u, v) and (v, u) are edges, weight 0
* ``FORWARD``  -- only (u, v) is an edge, weight +1
* ``BACKWARD`` -- only (v, u) is an edge, weight -1

The imbalance of a walk is the sum of its step weights; a walk is balanced
when its imbalance is zero.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    pass


class NoSuchEdgeError(GraphError):
    """Raised when a traversal refers to a pair absent from the view."""


class WalkError(GraphError):
    """An invalid step in a walk; ``index`` is the position of the step."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class InstanceFormatError(GraphError):
    """Base class for instance-file problems. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class HeaderError(InstanceFormatError):
    pass


class VertexRangeError(InstanceFormatError):
    pass


class SelfLoopError(InstanceFormatError):
    pass


class DuplicateEdgeError(InstanceFormatError):
    pass


class EdgeCountError(InstanceFormatError):
    pass


class EdgeClass(enum.IntEnum):
    BACKWARD = -1
    NEUTRAL = 0
    FORWARD = 1

    @property
    def weight(self) -> int:
        return int(self)


@dataclass(frozen=True)
class DirectedGraph:
    """Vertices ``0..n-1`` and a set of ordered pairs; no loops, no multi-edges."""

    n: int
    edges: frozenset

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        edge_list = [(int(u), int(v)) for u, v in edges]
        edge_set = frozenset(edge_list)
        if len(edge_set) != len(edge_list):
            raise DuplicateEdgeError("duplicate directed edge")
        for u, v in edge_set:
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u}, {v}) out of range for n={n}")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", edge_set)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @cached_property
    def view(self) -> ClassifiedView:
        return ClassifiedView(self)


class ClassifiedView:
    """Underlying undirected graph with skew-symmetric traversal weights.

    ``neighbors(u)`` is sorted ascending, which fixes the traversal order used
    by every breadth-first search in the package.
    """

    def __init__(self, graph: DirectedGraph):
        self.graph = graph
        self.n = graph.n
        adj: list[set[int]] = [set() for _ in range(graph.n)]
        for u, v in graph.edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self._adj[u]

    def has_pair(self, u: int, v: int) -> bool:
        edges = self.graph.edges
        return (u, v) in edges or (v, u) in edges

    def pairs(self) -> Iterator[tuple[int, int]]:
        """Each present unordered pair once, as ``(u, v)`` with ``u < v``."""
        for u, nbrs in enumerate(self._adj):
            for v in nbrs:
                if u < v:
                    yield u, v

    @property
    def pair_count(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def weight(self, u: int, v: int) -> int:
        edges = self.graph.edges
        fwd = (u, v) in edges
        bwd = (v, u) in edges
        if fwd and bwd:
            return 0
        if fwd:
            return 1
        if bwd:
            return -1
        raise NoSuchEdgeError(f"no such edge between {u} and {v}")


def classify_edge(view: ClassifiedView, u: int, v: int) -> EdgeClass:
    return EdgeClass(view.weight(u, v))


class Walk(tuple):
    """A vertex sequence ``v0, v1, ..., vL``; ``length`` counts steps, not vertices."""

    def __new__(cls, vertices: Iterable[int] = ()):
        return super().__new__(cls, (int(v) for v in vertices))

    @property
    def length(self) -> int:
        return max(len(self) - 1, 0)

    @property
    def start(self) -> int:
        return self[0]

    @property
    def end(self) -> int:
        return self[-1]

    def steps(self) -> Iterator[tuple[int, int]]:
        return zip(self, self[1:])

    def reverse(self) -> Walk:
        return Walk(reversed(self))

    def then(self, other: Sequence[int]) -> Walk:
        """Concatenate, sharing the junction vertex."""
        if not self:
            return Walk(other)
        if not other:
            return self
        if self[-1] != other[0]:
            raise WalkError(f"cannot join walk ending at {self[-1]} to one starting at {other[0]}")
        return Walk(tuple(self) + tuple(other[1:]))

    def __repr__(self) -> str:
        return f"Walk({list(self)!r})"


def walk_imbalance(view: ClassifiedView, walk: Sequence[int]) -> int:
    """Forward-step count minus backward-step count along ``walk``."""
    total = 0
    for i, (u, v) in enumerate(zip(walk, walk[1:])):
        try:
            total += view.weight(u, v)
        except NoSuchEdgeError:
            raise WalkError(f"step {i}: no edge between {u} and {v}", index=i) from None
    return total


def check_walk(view: ClassifiedView, walk: Sequence[int]) -> None:
    """Raise ``WalkError`` unless every vertex is in range and every step is a present pair."""
    if len(walk) == 0:
        raise WalkError("empty walk")
    for i, v in enumerate(walk):
        if not 0 <= v < view.n:
            raise WalkError(f"vertex {v} at position {i} out of range", index=i)
    for i, (u, v) in enumerate(zip(walk, walk[1:])):
        if not view.has_pair(u, v):
            raise WalkError(f"step {i}: no edge between {u} and {v}", index=i)


@dataclass(frozen=True)
class Instance:
    graph: DirectedGraph
    s: int
    t: int
    comments: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        n = self.graph.n
        if not (0 <= self.s < n and 0 <= self.t < n):
            raise VertexRangeError(f"s={self.s}, t={self.t} out of range for n={n}")

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def view(self) -> ClassifiedView:
        return self.graph.view


def _ints(tokens: list[str], line: int, err: type[InstanceFormatError]) -> list[int]:
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise err(f"expected integers, got {' '.join(tokens)!r}", line) from None


def parse_instance(text: str) -> Instance:
    """Parse the ``n m s t`` header plus ``m`` edge lines; ``#`` lines are comments."""
    comments = []
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            comments.append(stripped[1:].strip())
            continue
        if not stripped:
            continue
        rows.append((lineno, stripped.split()))

    if not rows:
        raise HeaderError("missing header line")
    lineno, header = rows[0]
    if len(header) != 4:
        raise HeaderError(f"header needs 4 fields 'n m s t', got {len(header)}", lineno)
    n, m, s, t = _ints(header, lineno, HeaderError)
    if n < 1 or m < 0:
        raise HeaderError(f"bad counts n={n}, m={m}", lineno)
    if not (0 <= s < n and 0 <= t < n):
        raise VertexRangeError(f"s={s}, t={t} out of range for n={n}", lineno)

    body = rows[1:]
    if len(body) != m:
        line = body[m][0] if len(body) > m else None
        raise EdgeCountError(f"header declares {m} edges, found {len(body)}", line)
    seen: set[tuple[int, int]] = set()
    for lineno, toks in body:
        if len(toks) != 2:
            raise InstanceFormatError(f"edge line needs 2 fields, got {len(toks)}", lineno)
        u, v = _ints(toks, lineno, InstanceFormatError)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) out of range for n={n}", lineno)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", lineno)
        if (u, v) in seen:
            raise DuplicateEdgeError(f"duplicate edge ({u}, {v})", lineno)
        seen.add((u, v))
    return Instance(DirectedGraph(n, seen), s, t, tuple(comments))


def serialize_instance(instance: Instance) -> str:
    g = instance.graph
    lines = [f"# {c}" for c in instance.comments]
    lines.append(f"{g.n} {g.m} {instance.s} {instance.t}")
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def read_instance(path) -> Instance:
    with open(path) as fh:
        return parse_instance(fh.read())


def parse_walk(text: str) -> Walk:
    """Walk files hold space-separated vertex ids; ``#`` lines are comments."""
    tokens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            tokens.extend(int(tok) for tok in stripped.split())
        except ValueError:
            raise WalkError(f"line {lineno}: expected vertex ids, got {stripped!r}") from None
    return Walk(tokens)


def format_walk(walk: Sequence[int]) -> str:
    return " ".join(str(v) for v in walk)
