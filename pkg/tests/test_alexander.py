import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wograph import (
    alexander_dual,
    alexander_dual_via_components,
    dual_edge_intersection,
    dual_vector,
    edge_ideal,
    lcm_exponent,
    new_graph,
)
from wograph import corpus
from wograph.errors import IsolatedVertex, OutOfBox, VectorTooSmall, ZeroIdeal
from wograph.ideal import minimalize


@given(st.lists(st.integers(1, 6), min_size=1, max_size=5).flatmap(
    lambda a: st.tuples(
        st.just(tuple(a)),
        st.tuples(*(st.integers(0, x) for x in a)))))
@settings(max_examples=80, deadline=None)
def test_dual_vector_involution(pair):
    a, b = pair
    assert dual_vector(dual_vector(b, a), a) == b


def test_dual_vector_out_of_box():
    with pytest.raises(OutOfBox):
        dual_vector((3,), (2,))
    with pytest.raises(OutOfBox):
        dual_vector((1, 0), (2,))


def test_single_generator_dual():
    I = minimalize(("x", "y"), [(1, 2)])
    D = alexander_dual(I)
    assert D.gens == {(1, 0), (0, 1)}


def test_vector_too_small():
    I = minimalize(("x", "y"), [(1, 2)])
    with pytest.raises(VectorTooSmall):
        alexander_dual(I, (1, 1))


def test_zero_ideal_has_no_dual():
    g = new_graph(["a"], [1], [])
    with pytest.raises(ZeroIdeal):
        alexander_dual(edge_ideal(g))


def test_isolated_vertex_blocks_edge_route():
    g = new_graph(["a", "b", "c"], [1, 2, 1], [("a", "b")])
    with pytest.raises(IsolatedVertex):
        dual_edge_intersection(g)


def test_double_duality_same_vector(small_corpus):
    for g in small_corpus[:100]:
        I = edge_ideal(g)
        if I.is_zero:
            continue
        a = lcm_exponent(I)
        assert alexander_dual(alexander_dual(I, a), a) == I


def test_three_routes_agree(small_corpus):
    for g in small_corpus[:100]:
        I = edge_ideal(g)
        if I.is_zero:
            continue
        D = alexander_dual(I)
        assert D == alexander_dual_via_components(g)
        touched = {v for arc in g.arcs for v in arc}
        if touched == set(g.vertices):
            assert D == dual_edge_intersection(g)


def test_bigger_box_still_dualizes():
    I = minimalize(("x", "y"), [(1, 2), (2, 1)])
    a = (3, 3)
    D = alexander_dual(I, a)
    assert alexander_dual(D, a) == I


def test_ex6_dual_matches_random_seeded():
    for g in corpus.random_instances(25, n_max=5, w_max=3, seed=99):
        I = edge_ideal(g)
        assert alexander_dual(I) == alexander_dual_via_components(g)
