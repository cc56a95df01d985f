"""Decide balanced s-t connectivity from spanning-tree potentials.

Root a breadth-first spanning tree of the undirected view at ``s`` and let
``p(v)`` be the imbalance of the tree path from ``s`` to ``v``. Every non-tree
pair ``{u, v}`` closes a fundamental cycle whose imbalance is the discrepancy
``p(u) + w(u->v) - p(v)``. Any closed walk's imbalance is an integer
combination of these discrepancies, and conversely a walk can detour to any
fundamental cycle, loop it either way, and come back at zero net cost. So the
imbalances of s-t walks are exactly the coset ``p(t) + g*Z`` where ``g`` is the
gcd of the discrepancies (``g = 0`` when there are none), and a balanced walk
exists iff ``t`` is reachable and that coset contains zero.
"""
from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator

from .graph import ClassifiedView, Instance, Walk


class Answer(enum.Enum):
    YES = "YES"
    NO = "NO"


class Reason(enum.Enum):
    DISCONNECTED = "disconnected"
    COSET_MISSES_ZERO = "coset-misses-zero"


@dataclass(frozen=True)
class PotentialAssignment:
    root: int
    parent: dict[int, int | None]
    depth: dict[int, int]
    p: dict[int, int]

    def covers(self, v: int) -> bool:
        return v in self.p

    def tree_path(self, v: int) -> Walk:
        """Tree path from ``v`` up to the root."""
        path = [v]
        while self.parent[path[-1]] is not None:
            path.append(self.parent[path[-1]])
        return Walk(path)

    def is_tree_pair(self, u: int, v: int) -> bool:
        return self.parent.get(v) == u or self.parent.get(u) == v


def compute_potentials(view: ClassifiedView, root: int, reverse: bool = False) -> PotentialAssignment:
    """BFS spanning tree of ``root``'s component, neighbors in ascending id order.

    ``reverse=True`` visits neighbors in descending order instead; the decision
    must not depend on it.
    """
    if not 0 <= root < view.n:
        raise ValueError(f"root {root} out of range")
    parent: dict[int, int | None] = {root: None}
    depth = {root: 0}
    p = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        nbrs = view.neighbors(u)
        for v in reversed(nbrs) if reverse else nbrs:
            if v not in parent:
                parent[v] = u
                depth[v] = depth[u] + 1
                p[v] = p[u] + view.weight(u, v)
                queue.append(v)
    return PotentialAssignment(root, parent, depth, p)


@dataclass(frozen=True)
class CycleStructure:
    g: int
    discrepancies: dict[tuple[int, int], int]
    potentials: PotentialAssignment = field(repr=False)

    def fundamental_cycle(self, u: int, v: int) -> Walk:
        """Closed walk ``u -> v`` over the pair, then the tree path back to ``u``."""
        pot = self.potentials
        up_v = list(pot.tree_path(v))
        up_u = list(pot.tree_path(u))
        on_u = set(up_u)
        # climb from v until we meet u's ancestor chain
        i = 0
        while up_v[i] not in on_u:
            i += 1
        lca = up_v[i]
        down_to_u = up_u[: up_u.index(lca)]
        return Walk([u] + up_v[: i + 1] + down_to_u[::-1])

    def cycles(self) -> Iterator[tuple[tuple[int, int], Walk, int]]:
        for pair, delta in self.discrepancies.items():
            yield pair, self.fundamental_cycle(*pair), delta


def cycle_gcd(view: ClassifiedView, potentials: PotentialAssignment) -> CycleStructure:
    p = potentials.p
    disc = {}
    g = 0
    for u in p:
        for v in view.neighbors(u):
            if u < v and not potentials.is_tree_pair(u, v):
                delta = p[u] + view.weight(u, v) - p[v]
                disc[(u, v)] = delta
                g = math.gcd(g, delta)
    return CycleStructure(g, disc, potentials)


@dataclass(frozen=True)
class Verdict:
    answer: Answer
    reason: Reason | None = None
    k0: int | None = None
    g: int | None = None
    witness: Walk | None = None

    @property
    def yes(self) -> bool:
        return self.answer is Answer.YES

    def as_record(self) -> dict:
        return {
            "answer": self.answer.value,
            "k0": self.k0,
            "g": self.g,
            "reason": self.reason.value if self.reason else None,
        }


def coset_contains_zero(k0: int, g: int) -> bool:
    return k0 % g == 0 if g else k0 == 0


def decide_balanced(instance: Instance, reverse: bool = False) -> Verdict:
    view = instance.view
    pot = compute_potentials(view, instance.s, reverse=reverse)
    if not pot.covers(instance.t):
        return Verdict(Answer.NO, Reason.DISCONNECTED)
    g = cycle_gcd(view, pot).g
    k0 = pot.p[instance.t]
    if coset_contains_zero(k0, g):
        return Verdict(Answer.YES, k0=k0, g=g)
    return Verdict(Answer.NO, Reason.COSET_MISSES_ZERO, k0=k0, g=g)
