"""Instance generators.

``gen_figure1`` builds the family whose only balanced s-t walks have
quadratic length: a directed path ``s = p_0 -> ... -> p_{n/2} = t`` and, hanging
off its midpoint ``v = p_{n/4}``, a cycle ``v, q_1, ..., q_{n/2-1}, v`` of
length n/2. Every cycle edge is two-way except ``{v, u}`` with
``u = q_{n/2-1}``, which only has the directed edge ``(v, u)``. Going around
``v -> q_1 -> ... -> u -> v`` ends with a backward step, so each such loop
has imbalance -1 and n/2 of them cancel the path.

``gen_random`` draws from Python's ``random.Random`` (Mersenne Twister,
seeded with the given integer), so output is reproducible across platforms.
"""
from __future__ import annotations

import random

from .graph import DirectedGraph, Instance

DEGENERATE_KINDS = ("tree", "all-neutral", "single-directed-cycle", "disconnected")


def figure1_vertices(n: int) -> dict:
    """Vertex ids of the figure-1 construction: path ``p``, cycle ``q``, and ``s, t, v, u``."""
    check_figure1_n(n)
    half = n // 2
    path = list(range(half + 1))
    cycle = list(range(half + 1, n))
    return {"path": path, "cycle": cycle, "s": path[0], "t": path[-1], "v": path[n // 4], "u": cycle[-1]}


def check_figure1_n(n: int) -> None:
    if n < 8 or n % 4:
        raise ValueError(f"figure-1 family needs n >= 8 with n divisible by 4, got {n}")


def gen_figure1(n: int) -> Instance:
    ids = figure1_vertices(n)
    path, q, v, u = ids["path"], ids["cycle"], ids["v"], ids["u"]
    edges = list(zip(path, path[1:]))
    ring = [v] + q
    for a, b in zip(ring, ring[1:]):
        edges += [(a, b), (b, a)]
    edges.append((v, u))
    graph = DirectedGraph(n, edges)
    assert graph.m == 3 * n // 2 - 1
    return Instance(graph, ids["s"], ids["t"], (f"generator figure1 n={n}",))


def figure1_canonical_walk(n: int, loops: int | None = None) -> list[int]:
    """Path to ``v``, ``loops`` turns of ``v -> q_1 -> ... -> u -> v`` (default n/2), then on to ``t``."""
    ids = figure1_vertices(n)
    path, v = ids["path"], ids["v"]
    loops = n // 2 if loops is None else loops
    turn = ids["cycle"] + [v]
    walk = path[: n // 4 + 1]
    for _ in range(loops):
        walk += turn
    return walk + path[n // 4 + 1 :]


def gen_random(n: int, p_directed: float, p_neutral: float, seed: int) -> Instance:
    """Random digraph on ``n`` vertices.

    For each pair ``u < v`` in lexicographic order: with probability
    ``p_neutral`` add both directions; otherwise with probability
    ``p_directed`` add a single edge whose direction is a fair coin flip.
    ``s`` and ``t`` are then drawn uniformly.
    """
    if not (0 <= p_directed <= 1 and 0 <= p_neutral <= 1):
        raise ValueError("probabilities must lie in [0, 1]")
    rng = random.Random(seed)
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < p_neutral:
                edges += [(a, b), (b, a)]
            elif rng.random() < p_directed:
                edges.append((a, b) if rng.random() < 0.5 else (b, a))
    s, t = rng.randrange(n), rng.randrange(n)
    note = f"generator random n={n} p_directed={p_directed} p_neutral={p_neutral} seed={seed}"
    return Instance(DirectedGraph(n, edges), s, t, (note,))


def gen_degenerate(kind: str, n: int) -> Instance:
    """Edge-case families.

    ``tree``: directed path 0 -> ... -> n-1, s=0, t=n-1.
    ``all-neutral``: the same path with every edge two-way.
    ``single-directed-cycle``: 0 -> 1 -> ... -> n-1 -> 0, s=0, t=1.
    ``disconnected``: two two-way paths on the lower and upper halves, s=0, t=n-1.
    """
    if n < 2:
        raise ValueError(f"degenerate families need n >= 2, got {n}")
    line = list(zip(range(n - 1), range(1, n)))
    if kind == "tree":
        edges, s, t = line, 0, n - 1
    elif kind == "all-neutral":
        edges, s, t = line + [(b, a) for a, b in line], 0, n - 1
    elif kind == "single-directed-cycle":
        if n < 3:
            raise ValueError("a directed cycle needs n >= 3")
        edges, s, t = line + [(n - 1, 0)], 0, 1
    elif kind == "disconnected":
        half = n // 2
        edges = [(a, b) for a, b in line if b < half or a >= half]
        edges += [(b, a) for a, b in edges]
        s, t = 0, n - 1
    else:
        raise ValueError(f"unknown degenerate kind {kind!r}; choose from {', '.join(DEGENERATE_KINDS)}")
    return Instance(DirectedGraph(n, edges), s, t, (f"generator degenerate kind={kind} n={n}",))
