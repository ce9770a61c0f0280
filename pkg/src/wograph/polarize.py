"""Polarization of monomial ideals and the auxiliary copy-variable graph.

Polarized variables are named ``<base>_<copy>`` (so ``x1_2`` is the second
copy of ``x1``); the polarized ambient is blocked by base vertex in input
order, then by copy index.
"""
from __future__ import annotations

from .errors import IsolatedVertex, VariableMismatch, ZeroIdeal
from .graph import SimpleGraph, VOGraph, classify_vertices
from .ideal import MonomialIdeal, lcm_exponent, minimalize


def polarized_name(base: str, copy: int) -> str:
    return f"{base}_{copy}"


def polarized_ambient(ambient, copy_counts) -> tuple[str, ...]:
    return tuple(polarized_name(v, j)
                 for v, r in zip(ambient, copy_counts)
                 for j in range(1, r + 1))


def polarize_ideal(I: MonomialIdeal) -> MonomialIdeal:
    """Replace x_i^{a_i} by the product of the first a_i copies of x_i.

    Copy counts come from the lcm exponent; the result is square-free with
    the same number of minimal generators.
    """
    if I.is_zero:
        raise ZeroIdeal("cannot polarize the zero ideal")
    counts = lcm_exponent(I)
    ambient = polarized_ambient(I.ambient, counts)
    offsets = []
    pos = 0
    for r in counts:
        offsets.append(pos)
        pos += r
    gens = set()
    for g in I.gens:
        e = [0] * pos
        for i, a in enumerate(g):
            for j in range(a):
                e[offsets[i] + j] = 1
        gens.add(tuple(e))
    return MonomialIdeal(ambient, frozenset(gens))


def depolarize(name: str) -> str:
    base, _, copy = name.rpartition("_")
    if not base or not copy.isdigit():
        raise VariableMismatch(f"{name} is not a polarized variable name")
    return base


def depolarize_check(I: MonomialIdeal, P: MonomialIdeal) -> bool:
    """True iff substituting every copy variable by its base recovers I."""
    bases = [depolarize(v) for v in P.ambient]
    unknown = set(bases) - set(I.ambient)
    if unknown:
        raise VariableMismatch(f"bases {sorted(unknown)} not in the ambient of I")
    idx = {v: i for i, v in enumerate(I.ambient)}
    gens = set()
    for g in P.gens:
        e = [0] * len(I.ambient)
        for b, a in zip(bases, g):
            e[idx[b]] += a
        gens.add(tuple(e))
    return minimalize(I.ambient, gens) == I


def g_superscript_d(g: VOGraph) -> SimpleGraph:
    """The simple graph on copy variables whose square-free edge ideal is the
    dual of the polarized dual of the edge ideal.

    One copy per vertex, plus copies 2..w(k) for every non-sink vertex of
    weight != 1; each arc (x_i, x_j) contributes the edges {x_{i,l}, x_{j,1}}
    for l up to w(i).
    """
    touched = {v for a in g.arcs for v in a}
    isolated = set(g.vertices) - touched
    if isolated:
        raise IsolatedVertex(f"{sorted(isolated)}")
    sinks = classify_vertices(g).sinks
    wmap = g.weight_map
    counts = [wmap[v] if (v not in sinks and wmap[v] != 1) else 1
              for v in g.vertices]
    vertices = polarized_ambient(g.vertices, counts)
    edges = set()
    for u, v in g.arcs:
        for l in range(1, wmap[u] + 1):
            edges.add(frozenset((polarized_name(u, l), polarized_name(v, 1))))
    return SimpleGraph(vertices, frozenset(edges))
