import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from balancedst.graph import DirectedGraph, Walk, WalkError, walk_imbalance
from balancedst.instances import figure1_canonical_walk, figure1_vertices, gen_figure1, gen_random
from balancedst.oracle import shortest_balanced, shortest_balanced_walk
from balancedst.solver import decide_balanced
from balancedst.witness import (
    build_witness,
    decompose_walk,
    plan_rebalance,
    plan_witness,
    rebalance_bound,
    rebalance_existing,
    verify_walk,
    witness_bound,
)

from conftest import instances, random_walks, tiny


def assert_conserved(view, walk, dec):
    assert walk_imbalance(view, walk) == walk_imbalance(view, dec.simple_path) + sum(
        walk_imbalance(view, c) for c in dec.cycles
    )
    assert len(walk) - 1 == dec.simple_path.length + sum(c.length for c in dec.cycles)
    assert len(set(dec.simple_path)) == len(dec.simple_path)
    for c in dec.cycles:
        assert c[0] == c[-1]
        assert len(set(c[:-1])) == c.length
        assert 2 <= c.length <= view.n


def test_decompose_back_and_forth():
    view = DirectedGraph(2, [(0, 1)]).view
    dec = decompose_walk(view, [0, 1, 0, 1])
    assert dec.simple_path == Walk([0, 1])
    assert dec.cycles == (Walk([0, 1, 0]),)
    assert walk_imbalance(view, dec.simple_path) == 1
    assert walk_imbalance(view, dec.cycles[0]) == 0


def test_decompose_simple_path_untouched():
    view = DirectedGraph(4, [(0, 1), (2, 1), (2, 3)]).view
    dec = decompose_walk(view, [0, 1, 2, 3])
    assert dec.simple_path == Walk([0, 1, 2, 3])
    assert dec.cycles == ()


def test_decompose_figure1_canonical():
    inst = gen_figure1(8)
    walk = figure1_canonical_walk(8)
    dec = decompose_walk(inst.view, walk)
    assert dec.simple_path == Walk([0, 1, 2, 3, 4])
    assert len(dec.cycles) == 4
    assert all(c.length == 4 and walk_imbalance(inst.view, c) == -1 for c in dec.cycles)
    assert_conserved(inst.view, walk, dec)


def test_decompose_rejects_invalid_walk():
    with pytest.raises(WalkError):
        decompose_walk(DirectedGraph(3, [(0, 1)]).view, [0, 2])


@given(st.data())
def test_decomposition_conservation(data):
    inst = data.draw(instances(min_n=2))
    walk = data.draw(random_walks(inst, max_len=60))
    assert_conserved(inst.view, walk, decompose_walk(inst.view, walk))


def test_rebalance_neutral_edge():
    inst = tiny(2, [(0, 1), (1, 0)])
    out = rebalance_existing(inst, [0, 1])
    assert verify_walk(inst, out).ok
    assert out.length <= rebalance_bound(2)


def test_rebalance_inflated_figure1():
    n = 8
    inst = gen_figure1(n)
    ids = figure1_vertices(n)
    v, turn = ids["v"], ids["cycle"] + [ids["v"]]
    counter = list(reversed(turn))[1:] + [v]  # v -> u -> ... -> q_1 -> v, imbalance +1
    walk = list(range(0, v + 1))
    walk += turn * 12
    walk += counter * 8
    walk += list(range(v + 1, ids["t"] + 1))
    assert len(walk) - 1 == 84
    assert walk_imbalance(inst.view, walk) == 0

    plan = plan_rebalance(inst, walk)
    assert plan.values == (1,)
    assert plan.k == -4
    assert plan.multipliers == (-4,)
    out = plan.assemble()
    assert verify_walk(inst, out).ok
    assert out.length <= rebalance_bound(n)
    assert out.length < 84


def test_rebalance_rejects_unbalanced():
    with pytest.raises(ValueError):
        rebalance_existing(tiny(2, [(0, 1)]), [0, 1])
    with pytest.raises(WalkError):
        rebalance_existing(tiny(3, [(0, 1), (1, 0), (1, 2), (2, 1)]), [1, 0])


def test_rebalance_oracle_walks():
    seen = 0
    for seed in range(300):
        inst = gen_random(2 + seed % 9, 0.35, 0.1, seed)
        walk = shortest_balanced_walk(inst, 3 * inst.n**3)
        if walk is None:
            continue
        out = rebalance_existing(inst, walk)
        assert verify_walk(inst, out).ok
        assert out.length <= rebalance_bound(inst.n)
        seen += 1
    assert seen > 50


def test_build_witness_forward_edge():
    assert build_witness(tiny(2, [(0, 1)])) is None


def test_build_witness_neutral_edge():
    assert build_witness(tiny(2, [(0, 1), (1, 0)])) == Walk([0, 1])


def test_build_witness_figure1():
    inst = gen_figure1(8)
    walk = build_witness(inst)
    assert verify_walk(inst, walk).ok
    assert 20 <= walk.length <= witness_bound(8)
    assert shortest_balanced(inst, 64) == 20


def test_build_witness_same_endpoint():
    assert build_witness(tiny(3, [(0, 1)], 2, 2)) == Walk([2])


@given(instances(max_n=8))
def test_witness_exists_iff_decide_yes(inst):
    walk = build_witness(inst)
    assert (walk is not None) == decide_balanced(inst).yes
    if walk is not None:
        assert verify_walk(inst, walk).ok
        assert walk.length <= witness_bound(inst.n)


def test_witness_plan_cycles_oriented_positive():
    for seed in range(200):
        inst = gen_random(9, 0.3, 0.05, seed)
        plan = plan_witness(inst)
        if plan is None:
            continue
        view = inst.view
        for e in plan.entries:
            assert walk_imbalance(view, e.cycle) == e.value
            assert walk_imbalance(view, e.cycle.reverse()) == -e.value
            assert e.connector[0] == inst.t and e.connector[-1] == e.cycle[0]
            assert len(set(e.connector)) == len(e.connector) <= inst.n
            assert walk_imbalance(view, e.connector.then(e.connector.reverse())) == 0
        assert sum(e.value * e.multiplier for e in plan.entries) == plan.k


def test_verify_neutral_edge():
    report = verify_walk(tiny(2, [(0, 1), (1, 0)]), [0, 1])
    assert report.valid and report.balanced and report.length == 1 and report.endpoints_ok


def test_verify_forward_edge():
    report = verify_walk(tiny(2, [(0, 1)]), [0, 1])
    assert report.valid and report.imbalance == 1 and not report.balanced


def test_verify_failure_modes():
    inst = tiny(3, [(0, 1), (1, 0)])
    assert not verify_walk(inst, []).valid
    assert not verify_walk(inst, [0, 2]).valid
    assert not verify_walk(inst, [0, 7]).valid
    report = verify_walk(inst, [1, 0])
    assert report.valid and report.balanced and not report.endpoints_ok


def test_verify_random_witnesses():
    yes = 0
    for seed in range(1000):
        inst = gen_random(3 + seed % 30, 0.1, 0.03, seed)
        walk = build_witness(inst)
        if walk is not None:
            assert verify_walk(inst, walk).ok
            yes += 1
    assert yes > 100
