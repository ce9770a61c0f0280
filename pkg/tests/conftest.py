import pytest

from wograph import corpus, new_graph, new_simple_graph


def make_ex6():
    """Six-vertex running example with weights (2,3,2,4,3,1)."""
    return new_graph(
        [f"x{i}" for i in range(1, 7)],
        [2, 3, 2, 4, 3, 1],
        [("x1", "x2"), ("x1", "x6"), ("x5", "x1"), ("x2", "x4"),
         ("x6", "x3"), ("x4", "x6"), ("x6", "x5")],
    )


def make_ex6b():
    """Six-vertex example whose dual is Cohen-Macaulay."""
    return new_graph(
        [f"x{i}" for i in range(1, 7)],
        [2, 3, 2, 1, 4, 3],
        [("x1", "x5"), ("x4", "x1"), ("x6", "x2"), ("x2", "x5"),
         ("x4", "x2"), ("x4", "x3"), ("x5", "x4"), ("x5", "x6")],
    )


def make_chordal_example():
    """Five-vertex chordal graph with simplicial vertices x2 and x5."""
    return new_simple_graph(
        ["x1", "x2", "x3", "x4", "x5"],
        [("x1", "x2"), ("x1", "x3"), ("x1", "x4"), ("x1", "x5"),
         ("x2", "x3"), ("x3", "x4"), ("x4", "x5")],
    )


@pytest.fixture
def ex6():
    return make_ex6()


@pytest.fixture
def ex6b():
    return make_ex6b()


@pytest.fixture
def chordal_example():
    return make_chordal_example()


@pytest.fixture(scope="session")
def small_corpus():
    """Every weighted oriented graph on up to 4 vertices, weights in {1, 2},
    up to relabelling."""
    graphs = []
    for n in (2, 3, 4):
        graphs.extend(corpus.all_graphs(n, weights=(1, 2)))
    return graphs
