import pytest

from wograph import (
    heights,
    is_cover,
    is_strong,
    is_unmixed,
    is_unmixed_lemma_path,
    minimal_vertex_covers,
    new_graph,
    new_simple_graph,
    partition,
    strong_covers,
    underlying,
    vertex_covers,
)
from wograph import corpus
from wograph.errors import NotACover, TooLarge


def test_vertex_covers_single_edge():
    sg = new_simple_graph(["a", "b"], [("a", "b")])
    assert vertex_covers(sg) == {
        frozenset({"a"}), frozenset({"b"}), frozenset({"a", "b"})}
    assert minimal_vertex_covers(sg) == {frozenset({"a"}), frozenset({"b"})}


def test_is_cover():
    sg = new_simple_graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert is_cover(sg, {"b"})
    assert not is_cover(sg, {"a"})


def test_partition_parts():
    # a -> b with w(b) = 3; cover {b}: no arc leaves, neighborhood of b not
    # inside the cover, so b lands in in_part
    g = new_graph(["a", "b"], [1, 3], [("a", "b")])
    p = partition(g, {"b"})
    assert p.in_part == {"b"} and not p.out_part and not p.full_part
    # cover {a, b}: a has no arc leaving the cover and its whole neighborhood
    # is inside, so a is fully surrounded; same for b
    p2 = partition(g, {"a", "b"})
    assert p2.full_part == {"a", "b"}
    with pytest.raises(NotACover):
        partition(g, set())


def test_strong_cover_semantics():
    # {a, b} is strong iff every fully-surrounded vertex receives an arc
    # from a weight-!=1 vertex inside; a receives nothing, so not strong
    g = new_graph(["a", "b"], [1, 3], [("a", "b")])
    assert not is_strong(g, {"a", "b"})
    assert is_strong(g, {"a"})
    assert is_strong(g, {"b"})
    assert strong_covers(g) == {frozenset({"a"}), frozenset({"b"})}


def test_strong_cover_weight_one_blocks():
    # b fully surrounded, only in-arc from weight-one a: not strong
    g = new_graph(["a", "b", "c"], [1, 2, 1],
                  [("a", "b"), ("c", "b")])
    assert not is_strong(g, {"a", "b", "c"})
    # on a 3-cycle with all weights != 1 every fully surrounded vertex gets a
    # qualifying in-arc, so the full cover is strong
    g2 = new_graph(["a", "b", "c"], [2, 2, 2],
                   [("c", "a"), ("a", "b"), ("b", "c")])
    assert is_strong(g2, {"a", "b", "c"})


def test_minimal_covers_are_strong(small_corpus):
    for g in small_corpus[:80]:
        for C in minimal_vertex_covers(underlying(g)):
            assert is_strong(g, C)
            assert not partition(g, C).full_part


def test_unmixed_formulations_agree(small_corpus):
    for g in small_corpus:
        assert is_unmixed(g) == is_unmixed_lemma_path(g)


def test_heights():
    g = new_graph(["a", "b"], [1, 3], [("a", "b")])
    h = heights(g)
    assert h.min_height == 1 and h.max_height == 1
    assert heights(new_graph(["a"], [1], [])).min_height == 0


def test_cap():
    sg = new_simple_graph([f"v{i}" for i in range(30)], [])
    with pytest.raises(TooLarge):
        vertex_covers(sg)


def test_unmixed_triangle_example():
    g = next(corpus.all_cycles(3, weights=(1,)))
    assert is_unmixed(g)
