"""Exponent-vector monomial arithmetic.

A monomial is a tuple of natural numbers aligned with an ambient variable
list; a monomial ideal stores its unique minimal generating set, so dataclass
equality is ideal equality.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import AmbientMismatch, ZeroIdeal
from .graph import VOGraph

Monomial = tuple[int, ...]

EXPONENT_CAP = 10**6  # paper-scale inputs are tiny; this only guards misuse


def divides(m: Monomial, n: Monomial) -> bool:
    return all(a <= b for a, b in zip(m, n))


def lcm_exp(m: Monomial, n: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(m, n))


@dataclass(frozen=True)
class MonomialIdeal:
    ambient: tuple[str, ...]
    gens: frozenset[Monomial]

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return (0,) * len(self.ambient) in self.gens

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def sorted_gens(self) -> list[Monomial]:
        return sorted(self.gens, key=lambda g: (sum(g), g))


@dataclass(frozen=True)
class ExponentVectorIdeal:
    """The irreducible ideal generated by x_i^{b_i} over all i with b_i >= 1."""

    b: Monomial

    def __post_init__(self):
        if not any(self.b):
            raise ZeroIdeal("an irreducible ideal needs a nonzero exponent vector")

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.b) if e >= 1)

    def as_ideal(self, ambient: tuple[str, ...]) -> MonomialIdeal:
        n = len(ambient)
        gens = set()
        for i, e in enumerate(self.b):
            if e >= 1:
                gens.add(tuple(e if j == i else 0 for j in range(n)))
        return MonomialIdeal(ambient, frozenset(gens))


def minimalize(ambient, gens) -> MonomialIdeal:
    """Drop every generator divisible by another; yields the minimal antichain."""
    ambient = tuple(ambient)
    gens = set(tuple(g) for g in gens)
    for g in gens:
        if len(g) != len(ambient):
            raise AmbientMismatch(f"generator length {len(g)} != {len(ambient)}")
        if any(e < 0 or e > EXPONENT_CAP for e in g):
            raise ZeroIdeal(f"exponent out of range in {g}")
    keep = set()
    for g in sorted(gens, key=sum):
        if not any(divides(h, g) for h in keep):
            keep.add(g)
    return MonomialIdeal(ambient, frozenset(keep))


def edge_ideal(g: VOGraph) -> MonomialIdeal:
    """The ideal generated by x_i * x_j^{w(j)} over all arcs (x_i, x_j)."""
    n = len(g.vertices)
    idx = {v: i for i, v in enumerate(g.vertices)}
    gens = set()
    for u, v in g.arcs:
        e = [0] * n
        e[idx[u]] = 1
        e[idx[v]] = g.weights[idx[v]]
        gens.add(tuple(e))
    return MonomialIdeal(g.vertices, frozenset(gens))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Minimal generators of the intersection, by pairwise lcm expansion."""
    if I.ambient != J.ambient:
        raise AmbientMismatch(f"{I.ambient} vs {J.ambient}")
    gens = {lcm_exp(g, h) for g in I.gens for h in J.gens}
    return minimalize(I.ambient, gens)


def intersect_all(ideals) -> MonomialIdeal:
    """Intersection of a nonempty sequence of ideals over one ambient."""
    ideals = list(ideals)
    if not ideals:
        raise ZeroIdeal("empty intersection is the unit ideal; not representable")
    acc = ideals[0]
    for J in ideals[1:]:
        acc = intersect(acc, J)
    return acc


def colon(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """(I : m), computed generator-wise as g / gcd(g, m)."""
    m = tuple(m)
    if len(m) != len(I.ambient):
        raise AmbientMismatch(f"monomial length {len(m)} != {len(I.ambient)}")
    gens = set()
    for g in I.gens:
        gens.add(tuple(max(a - b, 0) for a, b in zip(g, m)))
    return minimalize(I.ambient, gens)


def contains(I: MonomialIdeal, m: Monomial) -> bool:
    m = tuple(m)
    if len(m) != len(I.ambient):
        raise AmbientMismatch(f"monomial length {len(m)} != {len(I.ambient)}")
    return any(divides(g, m) for g in I.gens)


def lcm_exponent(I: MonomialIdeal) -> Monomial:
    """Coordinatewise max over the minimal generators (the vector a_I)."""
    if I.is_zero:
        raise ZeroIdeal("lcm exponent of the zero ideal")
    acc = (0,) * len(I.ambient)
    for g in I.gens:
        acc = lcm_exp(acc, g)
    return acc


def height(I: MonomialIdeal) -> int:
    """Minimum size of a set of variables meeting every generator's support."""
    if I.is_zero:
        return 0
    if I.is_unit:
        raise ZeroIdeal("the unit ideal has no height in this sense")
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in I.gens]
    n = len(I.ambient)
    from itertools import combinations
    for k in range(1, n + 1):
        for S in combinations(range(n), k):
            s = set(S)
            if all(s & sup for sup in supports):
                return k
    raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# rendering

def monomial_to_str(ambient, m: Monomial) -> str:
    """Render like ``x1*x2^3``; the empty monomial renders as ``1``."""
    parts = []
    for name, e in zip(ambient, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def ideal_to_strs(I: MonomialIdeal) -> list[str]:
    return [monomial_to_str(I.ambient, g) for g in I.sorted_gens()]


def exponent_ideal_to_str(ambient, b: Monomial) -> str:
    inner = ", ".join(
        monomial_to_str(ambient, tuple(e if j == i else 0 for j in range(len(b))))
        for i, e in enumerate(b) if e >= 1
    )
    return f"<{inner}>"


def gcd_monomial(m: Monomial, n: Monomial) -> Monomial:
    return tuple(min(a, b) for a, b in zip(m, n))


def support(m: Monomial) -> frozenset[int]:
    return frozenset(i for i, e in enumerate(m) if e)
