"""Short balanced walks: decompose, rebalance, reassemble.

A balanced s-t walk splits into a simple s-t path plus simple cycles. Only the
cycles' imbalances matter, so group them by absolute imbalance ``c_i``, shrink
the per-value multipliers with :func:`reduce_coefficients`, and rebuild::

    Q = P'  then, for each value c_i with m'_i != 0:
        connector t -> anchor, |m'_i| loops of the representative cycle
        (reversed when m'_i < 0), connector anchor -> t

Each connector is walked out and back, so it contributes nothing to the
imbalance of ``Q``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .diophantine import ReductionProblem, reduce_coefficients, solve_bounded
from .graph import ClassifiedView, Instance, Walk, WalkError, check_walk, walk_imbalance
from .solver import PotentialAssignment, compute_potentials, cycle_gcd

REBALANCE_LENGTH_FACTOR = 3
WITNESS_LENGTH_FACTOR = 16


def rebalance_bound(n: int) -> int:
    return REBALANCE_LENGTH_FACTOR * n**3


def witness_bound(n: int) -> int:
    return WITNESS_LENGTH_FACTOR * n**3


@dataclass(frozen=True)
class Decomposition:
    simple_path: Walk
    cycles: tuple[Walk, ...]
    splice_points: tuple[int, ...]


@dataclass(frozen=True)
class CyclePlan:
    value: int
    cycle: Walk  # closed at its anchor, imbalance +value
    multiplier: int
    connector: Walk  # t -> anchor


@dataclass(frozen=True)
class RebalancePlan:
    path: Walk
    k: int
    entries: tuple[CyclePlan, ...] = field(default=())

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(e.value for e in self.entries)

    @property
    def multipliers(self) -> tuple[int, ...]:
        return tuple(e.multiplier for e in self.entries)

    def assemble(self) -> Walk:
        q = list(self.path)
        for e in self.entries:
            if not e.multiplier:
                continue
            loop = e.cycle if e.multiplier > 0 else e.cycle.reverse()
            q.extend(e.connector[1:])
            for _ in range(abs(e.multiplier)):
                q.extend(loop[1:])
            q.extend(e.connector.reverse()[1:])
        return Walk(q)


def decompose_walk(view: ClassifiedView, walk) -> Decomposition:
    """Stack scan: whenever the next vertex is already on the stack, cut the loop off.

    ``splice_points[j]`` is the index in ``walk`` at which cycle ``j`` closed.
    """
    check_walk(view, walk)
    stack: list[int] = []
    where: dict[int, int] = {}
    cycles, splices = [], []
    for i, v in enumerate(walk):
        if v in where:
            cut = where[v]
            cycles.append(Walk(stack[cut:] + [v]))
            splices.append(i)
            for x in stack[cut + 1 :]:
                del where[x]
            del stack[cut + 1 :]
        else:
            where[v] = len(stack)
            stack.append(v)
    return Decomposition(Walk(stack), tuple(cycles), tuple(splices))


def rotate_cycle(cycle: Walk, anchor: int) -> Walk:
    body = list(cycle[:-1])
    i = body.index(anchor)
    body = body[i:] + body[:i]
    return Walk(body + [anchor])


def _connector(tree: PotentialAssignment, cycle: Walk) -> tuple[int, Walk]:
    """Cycle vertex nearest the tree root (ties: smallest id) and the root->vertex tree path."""
    anchor = min(cycle[:-1], key=lambda v: (tree.depth[v], v))
    return anchor, tree.tree_path(anchor).reverse()


def _plan_entries(view, tree, values, reps, multipliers) -> tuple[CyclePlan, ...]:
    entries = []
    for c, m in zip(values, multipliers):
        cycle = reps[c]
        anchor, conn = _connector(tree, cycle)
        cycle = rotate_cycle(cycle, anchor)
        if walk_imbalance(view, cycle) < 0:
            cycle = cycle.reverse()
        assert walk_imbalance(view, cycle) == c
        assert walk_imbalance(view, cycle.reverse()) == -c
        entries.append(CyclePlan(c, cycle, m, conn))
    return tuple(entries)


def _pick_representatives(view, tree, cycles) -> dict[int, Walk]:
    """Shortest cycle per absolute imbalance, ties broken by smallest anchor id."""
    best: dict[int, tuple[tuple[int, int], Walk]] = {}
    for cyc in cycles:
        c = abs(walk_imbalance(view, cyc))
        if c == 0:
            continue
        anchor, _ = _connector(tree, cyc)
        key = (cyc.length, anchor)
        if c not in best or key < best[c][0]:
            best[c] = (key, cyc)
    return {c: cyc for c, (_, cyc) in best.items()}


def plan_rebalance(instance: Instance, walk) -> RebalancePlan:
    view = instance.view
    walk = Walk(walk)
    check_walk(view, walk)
    if walk.start != instance.s or walk.end != instance.t:
        raise WalkError(f"walk runs {walk.start}->{walk.end}, expected {instance.s}->{instance.t}")
    if walk_imbalance(view, walk) != 0:
        raise ValueError("input walk is not balanced")

    dec = decompose_walk(view, walk)
    k = -walk_imbalance(view, dec.simple_path)
    net: dict[int, int] = {}
    for cyc in dec.cycles:
        b = walk_imbalance(view, cyc)
        if b:
            net[abs(b)] = net.get(abs(b), 0) + (1 if b > 0 else -1)
    values = tuple(sorted(net))
    if not values:
        assert k == 0
        return RebalancePlan(dec.simple_path, 0)

    tree = compute_potentials(view, instance.t)
    reps = _pick_representatives(view, tree, dec.cycles)
    problem = ReductionProblem(values, k, tuple(net[c] for c in values))
    reduced = reduce_coefficients(problem)
    return RebalancePlan(dec.simple_path, k, _plan_entries(view, tree, values, reps, reduced.m))


def rebalance_existing(instance: Instance, walk) -> Walk:
    """Shrink a balanced s-t walk to one of length at most ``3 n^3``."""
    return plan_rebalance(instance, walk).assemble()


def plan_witness(instance: Instance) -> RebalancePlan | None:
    view = instance.view
    tree = compute_potentials(view, instance.t)
    if not tree.covers(instance.s):
        return None
    path = tree.tree_path(instance.s)
    k = -walk_imbalance(view, path)
    if k == 0:
        return RebalancePlan(path, 0)

    structure = cycle_gcd(view, tree)
    cycles = [cyc for _, cyc, delta in structure.cycles() if delta]
    reps = _pick_representatives(view, tree, cycles)
    values = tuple(sorted(reps))
    multipliers = solve_bounded(values, k)
    if multipliers is None:
        return None
    return RebalancePlan(path, k, _plan_entries(view, tree, values, reps, multipliers))


def build_witness(instance: Instance) -> Walk | None:
    """A balanced s-t walk of length at most ``16 n^3``, or ``None`` if none exists.

    Built from a ``t``-rooted spanning tree: the tree path from ``s`` to ``t``,
    plus loops around fundamental cycles with multipliers from
    :func:`solve_bounded`.
    """
    plan = plan_witness(instance)
    return None if plan is None else plan.assemble()


@dataclass(frozen=True)
class WalkReport:
    valid: bool
    length: int
    imbalance: int | None
    balanced: bool
    endpoints_ok: bool
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.valid and self.balanced and self.endpoints_ok

    def as_record(self) -> dict:
        return {
            "valid": self.valid,
            "length": self.length,
            "imbalance": self.imbalance,
            "balanced": self.balanced,
            "endpoints_ok": self.endpoints_ok,
            "error": self.error,
        }


def verify_walk(instance: Instance, walk) -> WalkReport:
    """Recheck a claimed witness against the raw edge set only."""
    walk = list(walk)
    edges = instance.graph.edges
    length = max(len(walk) - 1, 0)
    if not walk:
        return WalkReport(False, 0, None, False, False, "empty walk")
    endpoints_ok = walk[0] == instance.s and walk[-1] == instance.t
    for i, v in enumerate(walk):
        if not (isinstance(v, int) and 0 <= v < instance.n):
            return WalkReport(False, length, None, False, endpoints_ok, f"vertex {v!r} at position {i} out of range")
    imbalance = 0
    for i in range(length):
        u, v = walk[i], walk[i + 1]
        fwd, bwd = (u, v) in edges, (v, u) in edges
        if not (fwd or bwd):
            return WalkReport(False, length, None, False, endpoints_ok, f"step {i}: no edge between {u} and {v}")
        imbalance += fwd - bwd
    return WalkReport(True, length, imbalance, imbalance == 0, endpoints_ok)
