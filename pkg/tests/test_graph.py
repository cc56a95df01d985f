import pytest
from hypothesis import given
from hypothesis import strategies as st

from balancedst.graph import (
    DirectedGraph,
    DuplicateEdgeError,
    EdgeClass,
    EdgeCountError,
    HeaderError,
    Instance,
    NoSuchEdgeError,
    SelfLoopError,
    VertexRangeError,
    Walk,
    WalkError,
    classify_edge,
    parse_instance,
    parse_walk,
    serialize_instance,
    walk_imbalance,
)
from balancedst.instances import figure1_canonical_walk, gen_figure1, gen_random

from conftest import instances, random_walks


def test_classify_forward_and_backward():
    view = DirectedGraph(2, [(0, 1)]).view
    assert classify_edge(view, 0, 1) is EdgeClass.FORWARD
    assert classify_edge(view, 1, 0) is EdgeClass.BACKWARD


def test_classify_neutral():
    view = DirectedGraph(2, [(0, 1), (1, 0)]).view
    assert classify_edge(view, 0, 1) is EdgeClass.NEUTRAL
    assert classify_edge(view, 1, 0) is EdgeClass.NEUTRAL


def test_classify_absent_pair():
    view = DirectedGraph(3, [(0, 1)]).view
    with pytest.raises(NoSuchEdgeError):
        classify_edge(view, 0, 2)


def test_out_and_back_cancels():
    view = DirectedGraph(2, [(0, 1)]).view
    assert walk_imbalance(view, [0, 1, 0]) == 0


def test_figure1_straight_path_imbalance():
    inst = gen_figure1(8)
    assert walk_imbalance(inst.view, [0, 1, 2, 3, 4]) == 4


def test_figure1_canonical_walk_is_balanced():
    inst = gen_figure1(8)
    walk = figure1_canonical_walk(8)
    assert len(walk) - 1 == 20
    assert walk_imbalance(inst.view, walk) == 0


def test_imbalance_names_bad_step():
    view = DirectedGraph(3, [(0, 1)]).view
    with pytest.raises(WalkError) as info:
        walk_imbalance(view, [0, 1, 2])
    assert info.value.index == 1


def test_graph_invariants_enforced():
    with pytest.raises(SelfLoopError):
        DirectedGraph(2, [(1, 1)])
    with pytest.raises(VertexRangeError):
        DirectedGraph(2, [(0, 2)])
    with pytest.raises(DuplicateEdgeError):
        DirectedGraph(2, [(0, 1), (0, 1)])


def test_parse_smallest_instance():
    inst = parse_instance("2 1 0 1\n0 1\n")
    assert inst == Instance(DirectedGraph(2, [(0, 1)]), 0, 1)


@pytest.mark.parametrize(
    "text, error",
    [
        ("2 1 0 1\n0 0\n", SelfLoopError),
        ("2 2 0 1\n0 1\n0 1\n", DuplicateEdgeError),
        ("2 1 0 1\n0 5\n", VertexRangeError),
        ("2 1 0 7\n0 1\n", VertexRangeError),
        ("2 1 0\n0 1\n", HeaderError),
        ("two 1 0 1\n0 1\n", HeaderError),
        ("", HeaderError),
        ("2 2 0 1\n0 1\n", EdgeCountError),
        ("2 0 0 1\n0 1\n", EdgeCountError),
    ],
)
def test_parse_errors_are_distinct(text, error):
    with pytest.raises(error):
        parse_instance(text)


def test_parse_error_carries_line_number():
    with pytest.raises(SelfLoopError) as info:
        parse_instance("# c\n3 2 0 1\n0 1\n2 2\n")
    assert info.value.line == 4


def test_comments_and_missing_trailing_newline():
    inst = parse_instance("# hello\n2 1 0 1\n# mid\n1 0")
    assert inst.graph.edges == {(1, 0)}
    assert inst.comments == ("hello", "mid")


def test_figure1_round_trip():
    inst = gen_figure1(8)
    assert parse_instance(serialize_instance(inst)) == inst


@given(instances())
def test_round_trip(inst):
    again = parse_instance(serialize_instance(inst))
    assert again == inst
    assert serialize_instance(again) == serialize_instance(inst)


@given(instances(min_n=2))
def test_skew_symmetry(inst):
    view = inst.view
    for u, v in view.pairs():
        assert view.weight(u, v) == -view.weight(v, u)
    for u in range(inst.n):
        for v in range(inst.n):
            present = (u, v) in inst.graph.edges or (v, u) in inst.graph.edges
            assert view.has_pair(u, v) == present


@given(st.data())
def test_reverse_negates_imbalance(data):
    inst = data.draw(instances(min_n=2))
    walk = data.draw(random_walks(inst))
    view = inst.view
    assert walk_imbalance(view, Walk(walk).reverse()) == -walk_imbalance(view, walk)


@given(st.data())
def test_concatenation_adds(data):
    inst = data.draw(instances(min_n=2))
    w1 = data.draw(random_walks(inst))
    view = inst.view
    w2 = [w1[-1]]
    for _ in range(data.draw(st.integers(0, 20))):
        nbrs = view.neighbors(w2[-1])
        if not nbrs:
            break
        w2.append(data.draw(st.sampled_from(nbrs)))
    joined = Walk(w1).then(w2)
    assert joined.length == len(w1) - 1 + len(w2) - 1
    assert walk_imbalance(view, joined) == walk_imbalance(view, w1) + walk_imbalance(view, w2)


@given(st.data())
def test_out_and_back_is_neutral(data):
    inst = data.draw(instances(min_n=2))
    walk = Walk(data.draw(random_walks(inst)))
    assert walk_imbalance(inst.view, walk.then(walk.reverse())) == 0


def test_walk_file_parsing():
    assert parse_walk("# w\n0 1 2\n3\n") == Walk([0, 1, 2, 3])
    with pytest.raises(WalkError):
        parse_walk("0 x\n")


def test_random_instance_valid():
    inst = gen_random(30, 0.2, 0.1, seed=3)
    assert parse_instance(serialize_instance(inst)) == inst
