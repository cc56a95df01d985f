"""Exhaustive ground truth: BFS over (vertex, running imbalance) states.

Only meant for small instances. The search is exact for walks whose every
prefix imbalance stays within ``[-bound, bound]``; since a prefix of a walk of
length L has imbalance at most L, a bound at least as large as the longest
witness :func:`~balancedst.witness.build_witness` can produce (``16 n^3``)
makes a negative answer sound.
"""
from __future__ import annotations

from collections import deque

from .graph import Instance, Walk

DEFAULT_STATE_CAP = 50_000_000


class ResourceLimitError(RuntimeError):
    pass


def default_bound(n: int) -> int:
    return 3 * n**3


def escalated_bound(n: int) -> int:
    return 16 * n**3


def _search(instance: Instance, bound: int, state_cap: int, want_walk: bool):
    if bound < 1:
        raise ValueError(f"bound must be positive, got {bound}")
    n, s, t = instance.n, instance.s, instance.t
    width = 2 * bound + 1
    if n * width > state_cap:
        raise ResourceLimitError(f"state space {n} x {width} exceeds cap {state_cap}")
    if s == t:
        return 0, Walk([s])

    view = instance.view
    steps = [[(v, view.weight(u, v)) for v in view.neighbors(u)] for u in range(n)]
    # state id = vertex * width + (balance + bound)
    start = s * width + bound
    goal = t * width + bound
    parent = {start: -1}
    dist = {start: 0}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        u, off = divmod(state, width)
        d = dist[state] + 1
        for v, w in steps[u]:
            nb = off + w
            if nb < 0 or nb >= width:
                continue
            nxt = v * width + nb
            if nxt in dist:
                continue
            dist[nxt] = d
            if want_walk:
                parent[nxt] = state
            if nxt == goal:
                if not want_walk:
                    return d, None
                path = [nxt]
                while parent[path[-1]] != -1:
                    path.append(parent[path[-1]])
                return d, Walk(x // width for x in reversed(path))
            queue.append(nxt)
    return None, None


def shortest_balanced(instance: Instance, bound: int, state_cap: int = DEFAULT_STATE_CAP) -> int | None:
    """Minimal length of a balanced s-t walk with all prefix imbalances in ``[-bound, bound]``."""
    return _search(instance, bound, state_cap, want_walk=False)[0]


def shortest_balanced_walk(instance: Instance, bound: int, state_cap: int = DEFAULT_STATE_CAP) -> Walk | None:
    """Same search, reconstructing one minimal walk from the BFS parents."""
    return _search(instance, bound, state_cap, want_walk=True)[1]
