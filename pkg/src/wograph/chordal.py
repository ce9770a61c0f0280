"""Chordality, perfect elimination orderings, the orientation compatibility
condition on complements, and the Cohen-Macaulayness decision for duals.

An ordering (v_1, ..., v_n) is a perfect elimination ordering here when each
v_i is simplicial in the subgraph induced by {v_1, ..., v_i}; a graph is
chordal iff such an ordering exists (Fulkerson-Gross).
"""
from __future__ import annotations

import itertools

from .errors import InvalidPEO, NotAPermutation, TooLarge, UnknownVertex
from .graph import SimpleGraph, VOGraph, classify_vertices, complement, underlying
from .polarize import g_superscript_d

PEO_SEARCH_CAP = 8


def is_simplicial(g: SimpleGraph, v: str) -> bool:
    """The closed neighborhood of v induces a complete graph."""
    if v not in g.vertices:
        raise UnknownVertex(v)
    nbrs = list(g.neighbors(v))
    return all(g.has_edge(a, b) for a, b in itertools.combinations(nbrs, 2))


def _induced(g: SimpleGraph, keep) -> SimpleGraph:
    keep = set(keep)
    return SimpleGraph(tuple(v for v in g.vertices if v in keep),
                       frozenset(e for e in g.edges if e <= keep))


def verify_peo(g: SimpleGraph, order) -> bool:
    order = tuple(order)
    if sorted(order) != sorted(g.vertices):
        raise NotAPermutation(f"{order} is not a permutation of the vertices")
    for i in range(len(order)):
        prefix = _induced(g, order[: i + 1])
        if not is_simplicial(prefix, order[i]):
            return False
    return True


def find_peo(g: SimpleGraph) -> tuple[str, ...] | None:
    """A perfect elimination ordering by greedy simplicial removal, or None.

    Vertices are emitted in removal-reverse order, so the returned tuple
    satisfies the prefix form of the definition.
    """
    current = g
    removed = []
    while current.vertices:
        pick = next((v for v in current.vertices if is_simplicial(current, v)),
                    None)
        if pick is None:
            return None
        removed.append(pick)
        current = _induced(current, set(current.vertices) - {pick})
    return tuple(reversed(removed))


def is_chordal(g: SimpleGraph) -> bool:
    return find_peo(g) is not None


def property_star(g: VOGraph, order) -> bool:
    """Check the compatibility condition between a perfect elimination
    ordering of the complement of the underlying graph and the arcs of g.

    For every pair x_j before x_i that is non-adjacent in the underlying
    graph, and every non-sink x_k of weight != 1 without an arc to x_i, there
    must be no arc from x_k to x_j either.
    """
    sg = underlying(g)
    comp = complement(sg)
    order = tuple(order)
    if not verify_peo(comp, order):
        raise InvalidPEO(f"{order} is not a perfect elimination ordering of "
                         "the complement")
    return _star_condition(g, order)


def _star_condition(g: VOGraph, order) -> bool:
    sg = underlying(g)
    wmap = g.weight_map
    sinks = classify_vertices(g).sinks
    ks = [k for k in g.vertices
          if k not in sinks and wmap[k] != 1
          and any(k in a for a in g.arcs)]
    pos = {v: i for i, v in enumerate(order)}
    for xj, xi in itertools.permutations(g.vertices, 2):
        if pos[xj] >= pos[xi] or sg.has_edge(xj, xi):
            continue
        for xk in ks:
            if (xk, xi) not in g.arcs and (xk, xj) in g.arcs:
                return False
    return True


def _all_peos(g: SimpleGraph):
    """Yield every perfect elimination ordering, by prefix backtracking."""
    n = len(g.vertices)

    def rec(prefix, remaining):
        if not remaining:
            yield tuple(prefix)
            return
        for v in sorted(remaining):
            sub = _induced(g, set(prefix) | {v})
            if is_simplicial(sub, v):
                prefix.append(v)
                remaining.remove(v)
                yield from rec(prefix, remaining)
                remaining.add(v)
                prefix.pop()

    yield from rec([], set(g.vertices))


def property_star_exists(g: VOGraph, cap: int = PEO_SEARCH_CAP):
    """Search every perfect elimination ordering of the complement for one
    satisfying :func:`property_star`; returns (found, witness ordering)."""
    if len(g.vertices) > cap:
        raise TooLarge(f"{len(g.vertices)} vertices exceeds the PEO search "
                       f"cap {cap}")
    comp = complement(underlying(g))
    for order in _all_peos(comp):
        if _star_condition(g, order):
            return True, order
    return False, None


def dual_is_cm(g: VOGraph) -> bool:
    """Exact test: the Alexander dual of the edge ideal is Cohen-Macaulay iff
    the complement of the copy-variable graph is chordal."""
    gd = g_superscript_d(g)
    return is_chordal(complement(gd))
