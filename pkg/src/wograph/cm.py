"""Cohen-Macaulayness: a homological oracle on Stanley-Reisner complexes and
the classification rules for paths, cycles, whiskered graphs and the two hub
constructions, plus the conjecture sweep.

The oracle polarizes the ideal, builds the complex whose minimal non-faces
are the generator supports, and demands vanishing reduced homology of every
link below its dimension. Homology ranks use exact elimination: integer
row reduction for the rationals, modular elimination for prime fields.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from . import chordal as chordal_mod
from . import covers as covers_mod
from .errors import (
    BadHint,
    NoLeafPerfectMatching,
    NotACycle,
    NotAPath,
    NotSquareFree,
    TooLarge,
    ZeroIdeal,
)
from .graph import (
    PATTERNS,
    SimpleGraph,
    VOGraph,
    classify_vertices,
    complement,
    cycle_order,
    delete_vertices,
    match_pattern,
    new_graph,
    underlying,
)
from .ideal import MonomialIdeal, edge_ideal, height, minimalize, support
from .polarize import polarize_ideal

COMPLEX_VAR_CAP = 16

FIELD_RATIONALS = "q"
FIELD_GF2 = "f2"


# ---------------------------------------------------------------------------
# exact matrix ranks

def _rank_rationals(rows: list[list[int]]) -> int:
    """Rank of an integer matrix over Q by integer row reduction; rows are
    rescaled by their gcd to keep entries small."""
    mat = [row[:] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        pivot = None
        for r in range(rank, nrows):
            v = mat[r][col]
            if v and (pivot is None or abs(v) < abs(mat[pivot][col])):
                pivot = r
                if abs(v) == 1:
                    break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        p = mat[rank][col]
        for r in range(rank + 1, nrows):
            v = mat[r][col]
            if not v:
                continue
            row = [p * a - v * b for a, b in zip(mat[r], mat[rank])]
            g = 0
            for a in row:
                g = gcd(g, a)
            if g > 1:
                row = [a // g for a in row]
            mat[r] = row
        rank += 1
    return rank


def _rank_mod(rows: list[list[int]], p: int) -> int:
    mat = [[a % p for a in row] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        pivot = next((r for r in range(rank, nrows) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], -1, p)
        mat[rank] = [(a * inv) % p for a in mat[rank]]
        for r in range(rank + 1, nrows):
            v = mat[r][col]
            if v:
                mat[r] = [(a - v * b) % p for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def _field_prime(field) -> int | None:
    if field in (None, FIELD_RATIONALS, "Q", "rationals"):
        return None
    if field in (FIELD_GF2, "gf2", 2):
        return 2
    if isinstance(field, int) and field >= 2:
        return field
    raise ValueError(f"unknown field spec: {field!r}")


def matrix_rank(rows: list[list[int]], field=FIELD_RATIONALS) -> int:
    p = _field_prime(field)
    if not rows or not rows[0]:
        return 0
    if p is None:
        return _rank_rationals(rows)
    return _rank_mod(rows, p)


# ---------------------------------------------------------------------------
# simplicial complexes

@dataclass(frozen=True)
class SimplicialComplex:
    """Faces of a Stanley-Reisner complex, stored by facet list."""

    vertices: tuple[str, ...]
    facets: frozenset[frozenset[str]]

    @property
    def dim(self) -> int:
        if not self.facets:
            return -1
        return max(len(f) for f in self.facets) - 1

    def faces(self) -> set[frozenset[str]]:
        out = {frozenset()}
        for f in self.facets:
            fl = sorted(f)
            for k in range(1, len(fl) + 1):
                out.update(frozenset(c) for c in itertools.combinations(fl, k))
        return out


def _face_masks_from_gens(n: int, gen_masks: list[int]) -> frozenset[int]:
    """All subsets of an n-set containing no generator support."""
    bad = bytearray(1 << n)
    full = (1 << n) - 1
    for g in gen_masks:
        free = full & ~g
        s = free
        while True:
            bad[g | s] = 1
            if s == 0:
                break
            s = (s - 1) & free
    return frozenset(m for m in range(1 << n) if not bad[m])


def _facets_of(masks: frozenset[int]) -> list[int]:
    return [m for m in masks
            if not any(m != o and m & o == m for o in masks)]


def stanley_reisner(I: MonomialIdeal) -> SimplicialComplex:
    """Complex whose faces are the supports of square-free monomials not
    in I."""
    if not I.is_squarefree:
        raise NotSquareFree("generators must be square-free")
    if I.is_zero:
        raise ZeroIdeal("the zero ideal defines the full simplex; pass it "
                        "explicitly if needed")
    n = len(I.ambient)
    if n > COMPLEX_VAR_CAP:
        raise TooLarge(f"{n} variables exceeds the complex cap {COMPLEX_VAR_CAP}")
    gen_masks = [sum(1 << i for i in support(g)) for g in I.gens]
    masks = _face_masks_from_gens(n, gen_masks)
    facets = frozenset(
        frozenset(I.ambient[i] for i in range(n) if m >> i & 1)
        for m in _facets_of(masks)
    )
    return SimplicialComplex(I.ambient, facets)


def _boundary_rank(faces_by_dim: dict[int, list[int]], k: int, field) -> int:
    """Rank of the boundary map from k-faces to (k-1)-faces (masks)."""
    cols = faces_by_dim.get(k, [])
    rows_idx = {m: i for i, m in enumerate(faces_by_dim.get(k - 1, []))}
    if not cols or (k > 0 and not rows_idx):
        return 0
    if k == 0:
        return 1  # augmentation map onto the span of the empty face
    mat = [[0] * len(cols) for _ in rows_idx]
    for j, m in enumerate(cols):
        verts = [i for i in range(m.bit_length()) if m >> i & 1]
        for pos, v in enumerate(verts):
            sub = m & ~(1 << v)
            mat[rows_idx[sub]][j] = -1 if pos % 2 else 1
    return matrix_rank(mat, field)


def _homology_ranks_masks(masks: frozenset[int], field) -> list[int]:
    """Reduced homology ranks in degrees -1 .. dim, for a face-mask set."""
    if not masks:
        return []
    by_dim: dict[int, list[int]] = {}
    for m in masks:
        if m:
            by_dim.setdefault(bin(m).count("1") - 1, []).append(m)
    dim = max(by_dim) if by_dim else -1
    counts = {k: len(v) for k, v in by_dim.items()}
    ranks = {k: _boundary_rank(by_dim, k, field) for k in range(0, dim + 1)}
    out = []
    for k in range(-1, dim + 1):
        if k == -1:
            out.append(1 - ranks.get(0, 0))
        else:
            out.append(counts.get(k, 0) - ranks.get(k, 0) - ranks.get(k + 1, 0))
    return out


def reduced_homology_ranks(K: SimplicialComplex, field=FIELD_RATIONALS) -> list[int]:
    """Ranks of reduced homology in degrees -1 .. dim K (index 0 is
    degree -1)."""
    n = len(K.vertices)
    if n > COMPLEX_VAR_CAP:
        raise TooLarge(f"{n} vertices exceeds the complex cap {COMPLEX_VAR_CAP}")
    idx = {v: i for i, v in enumerate(K.vertices)}
    masks = frozenset(sum(1 << idx[v] for v in f) for f in K.faces())
    return _homology_ranks_masks(masks, field)


def _components(masks: frozenset[int]) -> int:
    """Connected components of the 1-skeleton (isolated vertices count)."""
    verts = [m for m in masks if bin(m).count("1") == 1]
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for m in masks:
        if bin(m).count("1") == 2:
            lo = m & -m
            hi = m & ~lo
            ra, rb = find(lo), find(hi)
            if ra != rb:
                parent[ra] = rb
    return len({find(v) for v in verts})


def _link(masks: frozenset[int], fmask: int) -> frozenset[int]:
    return frozenset(m & ~fmask for m in masks if m & fmask == fmask)


def _cm_masks(masks: frozenset[int], field, memo, trail: int = 0):
    """Recursive Reisner check on a face-mask set.

    Returns (is_cm, failing (face_mask, degree) or None); face masks are
    relative to the original bit space, offset by ``trail`` (the vertices
    already linked away).
    """
    key = masks
    if key in memo:
        ok, cert = memo[key]
        if cert is None:
            return ok, None
        return ok, (cert[0] | trail, cert[1])
    # cone points are common in links; peel them off first
    facets = _facets_of(masks)
    apex = facets[0] if facets else 0
    for f in facets:
        apex &= f
    if apex:
        ok, cert = _cm_masks(_link(masks, apex), field, memo, trail | apex)
        memo[key] = (ok, None if ok else (cert[0] & ~trail, cert[1]))
        return ok, cert
    dim = max((bin(m).count("1") for m in masks), default=0) - 1
    if dim <= 0:
        memo[key] = (True, None)
        return True, None
    if _components(masks) > 1:
        memo[key] = (False, (0, 0))
        return False, (trail, 0)
    for v in (m for m in masks if bin(m).count("1") == 1):
        ok, cert = _cm_masks(_link(masks, v), field, memo, trail | v)
        if not ok:
            memo[key] = (False, (cert[0] & ~trail, cert[1]))
            return False, cert
    ranks = _homology_ranks_masks(masks, field)
    for deg in range(1, dim):
        if ranks[deg + 1]:
            memo[key] = (False, (0, deg))
            return False, (trail, deg)
    memo[key] = (True, None)
    return True, None


# ---------------------------------------------------------------------------
# the oracle and the classifiers

METHOD_ORACLE = "oracle"
METHOD_PATH = "path_thm"
METHOD_CYCLE = "cycle_thm"
METHOD_WHISKER = "whisker_thm"
METHOD_CONSTRUCTION = "construction"


@dataclass(frozen=True)
class CMReport:
    is_cm: bool
    method: str
    certificate: str


def is_cm_oracle(I: MonomialIdeal, field=FIELD_RATIONALS) -> CMReport:
    """Polarize, build the Stanley-Reisner complex, and run the link
    homology check."""
    if I.is_zero:
        return CMReport(True, METHOD_ORACLE, "zero ideal: the ambient ring")
    if I.is_unit:
        raise ZeroIdeal("the unit ideal has no quotient to test")
    P = I if I.is_squarefree else polarize_ideal(I)
    # quotienting by variables that are themselves generators just removes
    # them from the ambient ring
    var_gens = {g for g in P.gens if sum(g) == 1}
    drop = {next(i for i, e in enumerate(g) if e) for g in var_gens}
    ambient = tuple(v for i, v in enumerate(P.ambient) if i not in drop)
    keep = [i for i in range(len(P.ambient)) if i not in drop]
    remap = {old: new for new, old in enumerate(keep)}
    gens = []
    for g in P.gens - var_gens:
        gens.append(sum(1 << remap[i] for i in support(g)))
    n = len(ambient)
    if n > COMPLEX_VAR_CAP:
        raise TooLarge(f"{n} polarized variables exceeds the cap "
                       f"{COMPLEX_VAR_CAP}")
    if not gens:
        return CMReport(True, METHOD_ORACLE, "quotient is a polynomial ring")
    masks = _face_masks_from_gens(n, gens)
    ok, cert = _cm_masks(masks, field, {})
    if ok:
        return CMReport(True, METHOD_ORACLE,
                        f"all links have vanishing homology below their "
                        f"dimension (field={field})")
    fmask, deg = cert
    face = sorted(ambient[i] for i in range(n) if fmask >> i & 1)
    return CMReport(False, METHOD_ORACLE,
                    f"link of {face} has nonzero reduced homology in "
                    f"degree {deg} (field={field})")


def path_order(sg: SimpleGraph) -> list[str] | None:
    """Vertices end to end if the graph is a path on >= 2 vertices."""
    n = len(sg.vertices)
    if n < 2 or len(sg.edges) != n - 1:
        return None
    degs = {v: sg.degree(v) for v in sg.vertices}
    ends = [v for v, d in degs.items() if d == 1]
    if len(ends) != 2 or any(d > 2 or d == 0 for d in degs.values()):
        return None
    order = [min(ends)]
    prev = None
    while len(order) < n:
        nxt = [u for u in sg.neighbors(order[-1]) if u != prev]
        if len(nxt) != 1:
            return None
        prev = order[-1]
        order.append(nxt[0])
    return order


def classify_path(g: VOGraph) -> CMReport:
    """Paths are Cohen-Macaulay exactly on 2 vertices, or on 4 vertices when
    any inward arc at an inner vertex forces that vertex to weight 1."""
    order = path_order(underlying(g))
    if order is None:
        raise NotAPath("underlying graph is not a path on >= 2 vertices")
    n = len(order)
    if n == 2:
        return CMReport(True, METHOD_PATH, "path on 2 vertices")
    if n != 4:
        return CMReport(False, METHOD_PATH, f"path on {n} vertices")
    x1, x2, x3, x4 = order
    wmap = g.weight_map
    if (x2, x1) in g.arcs and wmap[x2] != 1:
        return CMReport(False, METHOD_PATH,
                        f"arc ({x2},{x1}) with w({x2}) != 1")
    if (x3, x4) in g.arcs and wmap[x3] != 1:
        return CMReport(False, METHOD_PATH,
                        f"arc ({x3},{x4}) with w({x3}) != 1")
    return CMReport(True, METHOD_PATH, "path on 4 vertices, proviso holds")


def classify_cycle_unmixed(g: VOGraph) -> bool:
    """Unmixedness of weighted oriented cycles by the four-case rule."""
    order = cycle_order(underlying(g))
    if order is None:
        raise NotACycle("underlying graph is not a cycle")
    n = len(order)
    wmap = g.weight_map
    if n == 3:
        return any(wmap[v] == 1 for v in order)
    if n in (4, 7):
        sinks = classify_vertices(g).sinks
        return all(v in sinks for v in order if wmap[v] != 1)
    if n == 5:
        if match_pattern(g, PATTERNS["D4"]):
            return True
        adjacent_ones = any(
            wmap[u] == 1 and wmap[v] == 1
            for u, v in zip(order, order[1:] + order[:1])
        )
        if not adjacent_ones:
            return False
        return not any(match_pattern(g, PATTERNS[p]) for p in ("D1", "D2", "D3"))
    return False


def classify_cycle_cm(g: VOGraph) -> CMReport:
    """Cohen-Macaulay cycles: length 3 with a weight-one vertex, or length 5
    matching D4 or carrying an adjacent weight-one pair outside D1-D3."""
    order = cycle_order(underlying(g))
    if order is None:
        raise NotACycle("underlying graph is not a cycle")
    n = len(order)
    wmap = g.weight_map
    if n == 3:
        if any(wmap[v] == 1 for v in order):
            return CMReport(True, METHOD_CYCLE, "triangle with a weight-one vertex")
        return CMReport(False, METHOD_CYCLE, "triangle with all weights != 1")
    if n == 5:
        if match_pattern(g, PATTERNS["D4"]):
            return CMReport(True, METHOD_CYCLE, "matches pattern D4")
        adjacent_ones = any(
            wmap[u] == 1 and wmap[v] == 1
            for u, v in zip(order, order[1:] + order[:1])
        )
        if not adjacent_ones:
            return CMReport(False, METHOD_CYCLE,
                            "no adjacent weight-one pair and not D4")
        hit = next((p for p in ("D1", "D2", "D3")
                    if match_pattern(g, PATTERNS[p])), None)
        if hit:
            return CMReport(False, METHOD_CYCLE, f"matches pattern {hit}")
        return CMReport(True, METHOD_CYCLE,
                        "adjacent weight-one pair, not D1/D2/D3")
    return CMReport(False, METHOD_CYCLE,
                    f"cycles of length {n} are never Cohen-Macaulay")


def leaf_matching(sg: SimpleGraph) -> list[tuple[str, str]] | None:
    """Perfect matching (x_i, y_i) with every y_i a leaf, or None.

    Each leaf can only match its unique neighbor, so the matching is forced
    up to the choice inside isolated-edge components.
    """
    leaves = {v for v in sg.vertices if sg.degree(v) == 1}
    pairs = []
    matched = set()
    for leaf in sorted(leaves):
        if leaf in matched:
            continue
        partner = next(iter(sg.neighbors(leaf)))
        if partner in matched:
            return None
        pairs.append((partner, leaf))
        matched.update((leaf, partner))
    if matched != set(sg.vertices):
        return None
    return pairs


def classify_whisker(g: VOGraph) -> CMReport:
    """For graphs with a perfect matching into leaves: Cohen-Macaulay,
    unmixed and the weight condition on matching arcs are all equivalent."""
    sg = underlying(g)
    pairs = leaf_matching(sg)
    if pairs is None:
        raise NoLeafPerfectMatching(
            "no perfect matching into leaf vertices")
    wmap = g.weight_map
    for x, y in pairs:
        if sg.degree(x) == 1:
            # isolated edge: orient the pair so the source plays x
            if (y, x) in g.arcs:
                x, y = y, x
        if (x, y) in g.arcs and wmap[x] != 1:
            return CMReport(False, METHOD_WHISKER,
                            f"(c) fails: arc ({x},{y}) with w({x}) != 1")
    return CMReport(True, METHOD_WHISKER,
                    "(c) holds: every matching arc into a leaf starts at "
                    "weight one")


def is_cm_auto(g: VOGraph, field=FIELD_RATIONALS) -> CMReport:
    """Dispatch to a classification rule when one applies, else the oracle."""
    sg = underlying(g)
    if not g.arcs:
        return CMReport(True, METHOD_ORACLE, "no edges: zero ideal")
    if path_order(sg) is not None:
        return classify_path(g)
    if cycle_order(sg) is not None:
        return classify_cycle_cm(g)
    if leaf_matching(sg) is not None:
        return classify_whisker(g)
    return is_cm_oracle(edge_ideal(g), field)


def classify_construction(h: VOGraph, hint: dict,
                          field=FIELD_RATIONALS) -> CMReport | None:
    """Apply the sufficient hub-construction conditions named by ``hint``.

    ``hint`` holds ``kind`` ("first" or "second"), the hub ``z``, the leaf
    ``y`` (first kind only) and the ``attach`` list. Returns a positive
    report when some rule fires, None when none applies; these rules never
    certify non-Cohen-Macaulayness.
    """
    kind = hint.get("kind")
    z = hint.get("z")
    y = hint.get("y")
    attach = list(hint.get("attach", []))
    if kind not in ("first", "second") or z not in h.vertices or not attach:
        raise BadHint(f"unusable hint {hint}")
    if kind == "first" and y not in h.vertices:
        raise BadHint("first construction hint needs y")
    wmap = h.weight_map
    expected_nbrs = set(attach) | ({y} if kind == "first" else set())
    if set(h.neighbors(z)) != expected_nbrs:
        raise BadHint(f"neighbors of {z} do not match the hint")
    if kind == "first" and set(h.neighbors(y)) != {z}:
        raise BadHint(f"{y} must be a leaf adjacent only to {z}")
    to_z = [x for x in attach if (x, z) in h.arcs]
    from_z = [x for x in attach if (z, x) in h.arcs]
    if len(to_z) + len(from_z) != len(attach):
        raise BadHint("attach vertices must all be adjacent to z")
    if from_z and wmap[z] != 1:
        return None  # the general shape requires every attach arc into z

    removed = {z, y} if kind == "first" else {z}
    d_g = delete_vertices(h, removed)
    d_f = delete_vertices(d_g, attach)
    sg_g = underlying(d_g)

    def arc_condition() -> bool:
        # arcs of D_G at a mixed-direction attach vertex must all point in
        for xj in from_z:
            for v in d_g.neighbors(xj):
                if v not in attach and (v, xj) not in d_g.arcs:
                    return False
        return True

    if from_z and not arc_condition():
        return None

    g_cm = is_cm_auto(d_g, field).is_cm
    if not g_cm:
        return None
    min_covers = covers_mod.minimal_vertex_covers(sg_g)
    rule_suffix = " (mixed arcs, w(z)=1)" if from_z else ""

    if kind == "first":
        if wmap[z] != 1 and (y, z) not in h.arcs:
            return None  # the general first-construction rules need (y, z)
        attach_set = set(attach)
        if any(attach_set <= C for C in min_covers):
            f_cm = d_f.arcs == frozenset() or is_cm_auto(d_f, field).is_cm
            if f_cm:
                return CMReport(
                    True, METHOD_CONSTRUCTION,
                    f"first construction at z={z}: attach set inside a "
                    f"minimal vertex cover{rule_suffix}")
        return None

    # second construction
    attach_set = frozenset(attach)
    if any(attach_set - {x} in min_covers for x in attach):
        return CMReport(
            True, METHOD_CONSTRUCTION,
            f"second construction at z={z}: attach set minus one vertex is "
            f"a minimal vertex cover{rule_suffix}")
    if not any(attach_set <= C for C in min_covers):
        I_g = edge_ideal(d_g)
        idx = {v: i for i, v in enumerate(d_g.vertices)}
        extra = []
        for x in to_z:
            e = [0] * len(d_g.vertices)
            e[idx[x]] = 1
            extra.append(tuple(e))
        for x in from_z:
            e = [0] * len(d_g.vertices)
            e[idx[x]] = wmap[x]
            extra.append(tuple(e))
        J = minimalize(d_g.vertices, set(I_g.gens) | set(extra))
        base_height = height(I_g) if not I_g.is_zero else 0
        if height(J) == base_height + 1:
            f_cm = d_f.arcs == frozenset() or is_cm_auto(d_f, field).is_cm
            if f_cm:
                return CMReport(
                    True, METHOD_CONSTRUCTION,
                    f"second construction at z={z}: attach set outside every "
                    f"minimal vertex cover with unit height jump{rule_suffix}")
    return None


# ---------------------------------------------------------------------------
# conjecture sweep

def squarefree_shadow(g: VOGraph) -> VOGraph:
    """Same arcs, all weights one: the underlying square-free edge ideal."""
    return new_graph(g.vertices, [1] * len(g.vertices), g.arcs)


def conjecture_row(instance_id: str, g: VOGraph, field=FIELD_RATIONALS,
                   with_dual: bool = True) -> dict:
    """One evidence row: oracle CM vs (unmixed and underlying CM), plus the
    dual-side verdicts when the graph has no isolated vertices."""
    unmixed = covers_mod.is_unmixed(g)
    cm = is_cm_oracle(edge_ideal(g), field).is_cm
    cm_under = is_cm_oracle(edge_ideal(squarefree_shadow(g)), field).is_cm
    row = {
        "instance_id": instance_id,
        "n": len(g.vertices),
        "weights": " ".join(str(w) for w in g.weights),
        "arcs": ";".join(f"{u}->{v}" for u, v in sorted(g.arcs)),
        "unmixed": unmixed,
        "cm_oracle": cm,
        "cm_underlying": cm_under,
        "conjecture_ok": cm == (unmixed and cm_under),
        "dual_cm": None,
        "gbar_chordal": None,
        "star_exists": None,
    }
    touched = {v for a in g.arcs for v in a}
    if with_dual and g.arcs and touched == set(g.vertices):
        row["dual_cm"] = chordal_mod.dual_is_cm(g)
        row["gbar_chordal"] = chordal_mod.is_chordal(complement(underlying(g)))
        try:
            row["star_exists"] = chordal_mod.property_star_exists(g)[0]
        except TooLarge:
            row["star_exists"] = None
    return row


def verify_conjecture(corpus, field=FIELD_RATIONALS, with_dual: bool = True) -> dict:
    """Sweep a corpus of (id, graph) pairs; report every instance where
    oracle Cohen-Macaulayness differs from [unmixed and underlying CM]."""
    rows = []
    violations = []
    for instance_id, g in corpus:
        row = conjecture_row(instance_id, g, field, with_dual=with_dual)
        rows.append(row)
        if not row["conjecture_ok"]:
            violations.append(instance_id)
    return {
        "instances": len(rows),
        "violations": violations,
        "rows": rows,
    }
