from itertools import combinations

import pytest
from hypothesis import strategies as st

from findex import build_graph, enumerate_connected, gen_family


@st.composite
def graphs(draw, max_n=7, min_n=0):
    """Arbitrary simple graphs, edges in arbitrary order."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    flipped = [(v, u) if draw(st.booleans()) else (u, v) for u, v in chosen]
    return build_graph(n, flipped)


@st.composite
def connected_graphs(draw, max_n=5):
    """Connected graphs: a random spanning tree plus extra edges."""
    n = draw(st.integers(1, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    extra = [p for p in combinations(range(n), 2) if p not in edges]
    if extra:
        edges.update(draw(st.lists(st.sampled_from(extra), unique=True)))
    return build_graph(n, sorted(edges))


def _small_corpus():
    out = list(enumerate_connected(4))
    out += [gen_family("cycle", 5), gen_family("star", 5), gen_family("complete", 5),
            gen_family("complete_bipartite", 2, 3)]
    # disconnected and edgeless graphs
    out += [build_graph(0, []), build_graph(2, []), build_graph(4, [(0, 1), (1, 2), (2, 0)]),
            build_graph(5, [(0, 1), (2, 3)])]
    return out


SMALL_CORPUS = _small_corpus()


@pytest.fixture(scope="session")
def small_corpus():
    return SMALL_CORPUS


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[key])
