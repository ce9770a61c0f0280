"""Primary decomposition of weighted oriented edge ideals via strong covers,
plus an independent colon-ideal oracle for associated primes."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import covers as covers_mod
from .errors import InternalInconsistency, NotStrong, TooLarge, ZeroIdeal
from .graph import VOGraph
from .ideal import (
    ExponentVectorIdeal,
    MonomialIdeal,
    colon,
    edge_ideal,
    intersect_all,
    lcm_exponent,
)

ORACLE_VAR_CAP = 16
ORACLE_EXP_CAP = 8


@dataclass(frozen=True)
class Decomposition:
    ambient: tuple[str, ...]
    components: tuple[tuple[frozenset[str], ExponentVectorIdeal], ...]


def irreducible_component(g: VOGraph, C) -> ExponentVectorIdeal:
    """Exponent vector: 1 on out_part, w(i) on full_part + in_part."""
    if not covers_mod.is_strong(g, C):
        raise NotStrong(f"{sorted(C)} is not a strong cover")
    p = covers_mod.partition(g, C)
    b = []
    for v, w in zip(g.vertices, g.weights):
        if v in p.out_part:
            b.append(1)
        elif v in p.full_part or v in p.in_part:
            b.append(w)
        else:
            b.append(0)
    return ExponentVectorIdeal(tuple(b))


def primary_decomposition(g: VOGraph, cap: int = covers_mod.VERTEX_CAP) -> Decomposition:
    """One irreducible component per strong cover; the intersection identity
    is asserted on every call."""
    I = edge_ideal(g)
    if I.is_zero:
        return Decomposition(g.vertices, ())
    strong = covers_mod.strong_covers(g, cap)
    comps = sorted(
        ((C, irreducible_component(g, C)) for C in strong),
        key=lambda t: (len(t[0]), sorted(t[0])),
    )
    if comps:
        joint = intersect_all(c.as_ideal(g.vertices) for _, c in comps)
        if joint != I:
            raise InternalInconsistency(
                "intersection of strong-cover components != edge ideal")
    elif not I.is_zero:
        raise InternalInconsistency("nonzero edge ideal with no strong cover")
    return Decomposition(g.vertices, tuple(comps))


def associated_primes(g: VOGraph, cap: int = covers_mod.VERTEX_CAP) -> set[frozenset[str]]:
    """Supports of the associated primes: exactly the strong covers."""
    return {C for C, _ in primary_decomposition(g, cap).components}


def ass_oracle(I: MonomialIdeal) -> set[frozenset[str]]:
    """Brute-force associated primes of a monomial ideal.

    Enumerates every monomial m below the lcm exponent and collects supports
    S with (I : m) = <x_i : i in S>. The coordinatewise bound by a_I is
    sufficient for monomial ideals.
    """
    if I.is_zero:
        raise ZeroIdeal("associated primes of the zero ideal")
    n = len(I.ambient)
    if n > ORACLE_VAR_CAP:
        raise TooLarge(f"{n} variables exceeds the oracle cap {ORACLE_VAR_CAP}")
    a = lcm_exponent(I)
    if any(e > ORACLE_EXP_CAP for e in a):
        raise TooLarge(f"exponent above the oracle cap {ORACLE_EXP_CAP}")
    found: set[frozenset[str]] = set()
    for m in itertools.product(*(range(e + 1) for e in a)):
        q = colon(I, m)
        if all(sum(1 for e in gen if e) == 1 and max(gen) == 1 for gen in q.gens) \
                and q.gens:
            sup = frozenset(I.ambient[i] for gen in q.gens
                            for i, e in enumerate(gen) if e)
            found.add(sup)
    return found
