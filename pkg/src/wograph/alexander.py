"""Generalized Alexander duality for monomial ideals.

The dual with respect to a vector a (coordinatewise at least the lcm exponent
a_I) is computed by the intersection formula over minimal generators; for
weighted oriented edge ideals two more routes exist (over the irreducible
components, and directly over the arcs) and all three must agree.
"""
from __future__ import annotations

from .decomp import primary_decomposition
from .errors import IsolatedVertex, OutOfBox, VectorTooSmall, ZeroIdeal
from .graph import VOGraph
from .ideal import (
    ExponentVectorIdeal,
    Monomial,
    MonomialIdeal,
    edge_ideal,
    intersect_all,
    lcm_exponent,
    minimalize,
)


def dual_vector(b: Monomial, a: Monomial) -> Monomial:
    """Coordinate i becomes a_i + 1 - b_i where b_i >= 1, and 0 elsewhere."""
    if len(b) != len(a) or any(e < 0 for e in b):
        raise OutOfBox(f"{b} is not a vector in the box of {a}")
    if any(e > f for e, f in zip(b, a)):
        raise OutOfBox(f"{b} exceeds {a}")
    return tuple(f + 1 - e if e >= 1 else 0 for e, f in zip(b, a))


def alexander_dual(I: MonomialIdeal, a: Monomial | None = None) -> MonomialIdeal:
    """Dual via the intersection over minimal generators x^b of the pure
    power ideals determined by the dual vectors b^a."""
    if I.is_zero:
        raise ZeroIdeal("the zero ideal has no Alexander dual")
    a_I = lcm_exponent(I)
    if a is None:
        a = a_I
    else:
        a = tuple(a)
        if len(a) != len(a_I) or any(x < y for x, y in zip(a, a_I)):
            raise VectorTooSmall(f"{a} is not >= the lcm exponent {a_I}")
    pieces = [ExponentVectorIdeal(dual_vector(g, a)).as_ideal(I.ambient)
              for g in I.gens]
    return intersect_all(pieces)


def alexander_dual_via_components(g: VOGraph) -> MonomialIdeal:
    """Dual of an edge ideal straight from the definition: one generator per
    irreducible component of the strong-cover decomposition."""
    I = edge_ideal(g)
    if I.is_zero:
        raise ZeroIdeal("the zero ideal has no Alexander dual")
    a = lcm_exponent(I)
    gens = {dual_vector(comp.b, a)
            for _, comp in primary_decomposition(g).components}
    return minimalize(g.vertices, gens)


def dual_edge_intersection(g: VOGraph) -> MonomialIdeal:
    """Dual of an edge ideal as the intersection over arcs (x_i, x_j) of
    <x_i^{w(i)}, x_j>. Needs no isolated vertices so that a_I equals the
    weight vector."""
    if not g.arcs:
        raise ZeroIdeal("graph has no arcs")
    idx = {v: i for i, v in enumerate(g.vertices)}
    touched = {v for a in g.arcs for v in a}
    isolated = set(g.vertices) - touched
    if isolated:
        raise IsolatedVertex(f"{sorted(isolated)}")
    n = len(g.vertices)
    pieces = []
    for u, v in g.arcs:
        b = [0] * n
        b[idx[u]] = g.weights[idx[u]]
        b[idx[v]] = 1
        pieces.append(ExponentVectorIdeal(tuple(b)).as_ideal(g.vertices))
    return intersect_all(pieces)
