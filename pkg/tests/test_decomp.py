import pytest

from wograph import (
    ass_oracle,
    associated_primes,
    edge_ideal,
    intersect_all,
    irreducible_component,
    new_graph,
    primary_decomposition,
    strong_covers,
)
from wograph.errors import NotStrong, TooLarge, ZeroIdeal
from wograph.ideal import minimalize


def test_single_arc_components():
    g = new_graph(["a", "b"], [1, 3], [("a", "b")])
    dec = primary_decomposition(g)
    got = {(C, comp.b) for C, comp in dec.components}
    assert got == {
        (frozenset({"a"}), (1, 0)),
        (frozenset({"b"}), (0, 3)),
    }


def test_irreducible_component_rejects_non_strong():
    g = new_graph(["a", "b"], [1, 3], [("a", "b")])
    with pytest.raises(NotStrong):
        irreducible_component(g, {"a", "b"})


def test_zero_ideal_decomposition():
    g = new_graph(["a", "b"], [1, 1], [])
    dec = primary_decomposition(g)
    assert dec.components == ()


def test_components_sorted_by_cover_size(ex6):
    dec = primary_decomposition(ex6)
    sizes = [len(C) for C, _ in dec.components]
    assert sizes == sorted(sizes)


def test_intersection_identity(small_corpus):
    for g in small_corpus:
        dec = primary_decomposition(g)
        I = edge_ideal(g)
        if dec.components:
            joint = intersect_all(
                comp.as_ideal(g.vertices) for _, comp in dec.components)
            assert joint == I
        else:
            assert I.is_zero


def test_ass_equals_strong_covers(small_corpus):
    for g in small_corpus[:120]:
        assert associated_primes(g) == strong_covers(g)


def test_ass_oracle_agrees(small_corpus):
    for g in small_corpus[:120]:
        I = edge_ideal(g)
        if I.is_zero:
            continue
        assert ass_oracle(I) == associated_primes(g)


def test_ass_oracle_guards():
    with pytest.raises(ZeroIdeal):
        ass_oracle(minimalize(("x",), set()))
    big = tuple(f"v{i}" for i in range(20))
    gen = tuple([1] * 20)
    with pytest.raises(TooLarge):
        ass_oracle(minimalize(big, [gen]))
