from pathlib import Path

import pytest
from hypothesis import strategies as st

from balancedst.graph import DirectedGraph, Instance

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def tiny(n, edges, s=0, t=1):
    return Instance(DirectedGraph(n, edges), s, t)


@st.composite
def instances(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    s = draw(st.integers(0, n - 1))
    t = draw(st.integers(0, n - 1))
    return Instance(DirectedGraph(n, edges), s, t)


@st.composite
def random_walks(draw, instance, max_len=40):
    """A valid walk in the instance's undirected view, from a vertex with neighbors."""
    view = instance.view
    starts = [v for v in range(instance.n) if view.neighbors(v)]
    if not starts:
        return [draw(st.integers(0, instance.n - 1))]
    walk = [draw(st.sampled_from(starts))]
    for _ in range(draw(st.integers(0, max_len))):
        walk.append(draw(st.sampled_from(view.neighbors(walk[-1]))))
    return walk


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit criteria, summarised at the end of the run")


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
