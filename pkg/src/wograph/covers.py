"""Vertex covers, the L1/L2/L3 partition, strong covers, unmixedness.

A cover C splits into three parts: ``out_part`` (vertices with an arc leaving
C), ``full_part`` (vertices whose whole neighborhood lies in C) and
``in_part`` (the rest: a neighbor outside C exists but every arc across the
boundary comes in). A cover is strong when every fully-surrounded vertex
receives an arc from a weight-!= 1 vertex of full_part or in_part; minimal
covers have empty full_part and are therefore always strong.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotACover, TooLarge
from .graph import SimpleGraph, VOGraph, underlying

VERTEX_CAP = 24


@dataclass(frozen=True)
class CoverPartition:
    cover: frozenset[str]
    out_part: frozenset[str]   # L1
    full_part: frozenset[str]  # L2
    in_part: frozenset[str]    # L3


def is_cover(g: SimpleGraph, C) -> bool:
    C = set(C)
    return all(set(e) & C for e in g.edges)


def _check_cap(n: int, cap: int):
    if n > cap:
        raise TooLarge(f"{n} vertices exceeds the enumeration cap {cap}")


def vertex_covers(g: SimpleGraph, cap: int = VERTEX_CAP) -> set[frozenset[str]]:
    """All vertex covers, by backtracking over the vertex list."""
    _check_cap(len(g.vertices), cap)
    verts = list(g.vertices)
    edges = [tuple(e) for e in g.edges]
    out: set[frozenset[str]] = set()

    def rec(i, chosen):
        if i == len(verts):
            out.add(frozenset(chosen))
            return
        v = verts[i]
        # leaving v out is only viable if no edge at v has its other
        # endpoint already excluded
        decided = set(verts[:i])
        viable_out = all(
            not (v in e and (set(e) - {v}) <= (decided - chosen))
            for e in edges
        )
        if viable_out:
            rec(i + 1, chosen)
        chosen.add(v)
        rec(i + 1, chosen)
        chosen.discard(v)

    rec(0, set())
    return out


def minimal_vertex_covers(g: SimpleGraph, cap: int = VERTEX_CAP) -> set[frozenset[str]]:
    covers = vertex_covers(g, cap)
    return {C for C in covers if not any(D < C for D in covers)}


def partition(g: VOGraph, C) -> CoverPartition:
    C = frozenset(C)
    sg = underlying(g)
    if not is_cover(sg, C):
        raise NotACover(f"{sorted(C)} misses an edge")
    out_part, full_part, in_part = set(), set(), set()
    for x in C:
        if any(a[0] == x and a[1] not in C for a in g.arcs):
            out_part.add(x)
        elif sg.neighbors(x) <= C:
            full_part.add(x)
        else:
            in_part.add(x)
    return CoverPartition(C, frozenset(out_part), frozenset(full_part),
                          frozenset(in_part))


def is_strong(g: VOGraph, C) -> bool:
    """Every fully-surrounded vertex gets an in-arc of weight != 1 from
    inside full_part + in_part."""
    p = partition(g, C)
    inside = p.full_part | p.in_part
    wmap = g.weight_map
    for x in p.full_part:
        if not any(a[1] == x and a[0] in inside and wmap[a[0]] != 1
                   for a in g.arcs):
            return False
    return True


def strong_covers(g: VOGraph, cap: int = VERTEX_CAP) -> set[frozenset[str]]:
    sg = underlying(g)
    return {C for C in vertex_covers(sg, cap) if is_strong(g, C)}


def is_unmixed(g: VOGraph, cap: int = VERTEX_CAP) -> bool:
    """All strong covers share one cardinality (all associated primes have
    the same height)."""
    sizes = {len(C) for C in strong_covers(g, cap)}
    return len(sizes) <= 1


def is_unmixed_lemma_path(g: VOGraph, cap: int = VERTEX_CAP) -> bool:
    """Secondary formulation: the underlying square-free ideal is unmixed and
    every strong cover is minimal (empty full_part). Must agree with
    :func:`is_unmixed` on every instance."""
    sg = underlying(g)
    minimal_sizes = {len(C) for C in minimal_vertex_covers(sg, cap)}
    if len(minimal_sizes) > 1:
        return False
    return all(not partition(g, C).full_part for C in strong_covers(g, cap))


@dataclass(frozen=True)
class Heights:
    min_height: int
    max_height: int


def heights(g: VOGraph, cap: int = VERTEX_CAP) -> Heights:
    strong = strong_covers(g, cap)
    if not strong:
        return Heights(0, 0)
    return Heights(min(len(C) for C in strong), max(len(C) for C in strong))
