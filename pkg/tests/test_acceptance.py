"""Acceptance suite: one test per criterion, each emitting a single
pass/fail line. All comparisons are exact (set/tuple equality); no numeric
tolerances are involved anywhere."""
import itertools

from wograph import (
    alexander_dual,
    alexander_dual_via_components,
    associated_primes,
    ass_oracle,
    classify_cycle_cm,
    classify_cycle_unmixed,
    classify_path,
    classify_whisker,
    complement,
    dual_edge_intersection,
    dual_is_cm,
    edge_ideal,
    g_superscript_d,
    intersect_all,
    is_chordal,
    is_cm_oracle,
    is_unmixed,
    lcm_exponent,
    new_graph,
    polarize_ideal,
    primary_decomposition,
    property_star,
    property_star_exists,
    underlying,
    verify_conjecture,
    verify_peo,
)
from wograph import corpus
from wograph.chordal import is_simplicial
from wograph.ideal import ExponentVectorIdeal, ideal_to_strs

from conftest import make_chordal_example, make_ex6, make_ex6b


def _report(num: int, name: str, ok: bool):
    print(f"criterion {num:02d} ({name}): {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {num} ({name}) failed"


def _full_corpus():
    graphs = []
    for n in (2, 3, 4):
        graphs.extend(corpus.all_graphs(n, weights=(1, 2)))
    return graphs


def test_criterion_01_worked_example_exact():
    g = make_ex6()
    I = edge_ideal(g)
    dec = primary_decomposition(g)
    got = {comp.b for _, comp in dec.components}
    expected = {
        (0, 1, 0, 0, 1, 1),      # <x2, x5, x6>
        (1, 0, 0, 4, 0, 1),      # <x1, x4^4, x6>
        (2, 1, 0, 0, 0, 1),      # <x1^2, x2, x6>
        (1, 0, 2, 1, 3, 0),      # <x1, x3^2, x4, x5^3>
        (0, 3, 0, 4, 1, 1),      # <x2^3, x4^4, x5, x6>
        (2, 3, 0, 4, 0, 1),      # <x1^2, x2^3, x4^4, x6>
    }
    ok = got == expected and len(dec.components) == 6
    ok = ok and lcm_exponent(I) == (2, 3, 2, 4, 3, 1)
    D = alexander_dual(I)
    ok = ok and set(ideal_to_strs(D)) == {
        "x2^3*x5^3*x6", "x1^2*x4*x6", "x1*x2^3*x6",
        "x1^2*x3*x4^4*x5", "x2*x4*x5^3*x6", "x1*x2*x4*x6",
    }
    seven = [
        (2, 1, 0, 0, 0, 0),  # <x1^2, x2>
        (1, 0, 0, 0, 3, 0),  # <x5^3, x1>
        (2, 0, 0, 0, 0, 1),  # <x1^2, x6>
        (0, 3, 0, 1, 0, 0),  # <x2^3, x4>
        (0, 0, 1, 0, 0, 1),  # <x6, x3>
        (0, 0, 0, 4, 0, 1),  # <x4^4, x6>
        (0, 0, 0, 0, 1, 1),  # <x6, x5>
    ]
    joint = intersect_all(
        ExponentVectorIdeal(b).as_ideal(g.vertices) for b in seven)
    ok = ok and D == joint
    _report(1, "worked example decomposition and dual", ok)


def test_criterion_02_dual_cm_example():
    g = make_ex6b()
    comp = complement(underlying(g))
    order = ("x1", "x3", "x6", "x2", "x4", "x5")
    ok = is_chordal(comp)
    ok = ok and verify_peo(comp, order)
    ok = ok and property_star(g, order)
    ok = ok and dual_is_cm(g)
    _report(2, "dual Cohen-Macaulay example", ok)


def test_criterion_03_elimination_ordering_example():
    sg = make_chordal_example()
    ok = verify_peo(sg, ("x1", "x3", "x4", "x2", "x5"))
    simp = {v: is_simplicial(sg, v) for v in sg.vertices}
    ok = ok and simp == {"x1": False, "x2": True, "x3": False,
                         "x4": False, "x5": True}
    _report(3, "elimination ordering example", ok)


def test_criterion_04_double_duality_and_route_agreement():
    graphs = _full_corpus()
    graphs += list(corpus.random_instances(200, n_max=6, w_max=3, seed=42))
    ok = True
    for g in graphs:
        I = edge_ideal(g)
        if I.is_zero:
            continue
        a = lcm_exponent(I)
        D = alexander_dual(I, a)
        if alexander_dual(D, a) != I:
            ok = False
            break
        if D != alexander_dual_via_components(g):
            ok = False
            break
        touched = {v for arc in g.arcs for v in arc}
        if touched == set(g.vertices) and D != dual_edge_intersection(g):
            ok = False
            break
    _report(4, "double duality and three-route agreement", ok)


def test_criterion_05_decomposition_and_ass_oracle():
    graphs = _full_corpus()
    graphs += list(corpus.random_instances(200, n_max=6, w_max=3, seed=42))
    ok = True
    for g in graphs:
        I = edge_ideal(g)
        dec = primary_decomposition(g)  # asserts the intersection identity
        if I.is_zero:
            if dec.components:
                ok = False
                break
            continue
        joint = intersect_all(
            comp.as_ideal(g.vertices) for _, comp in dec.components)
        if joint != I:
            ok = False
            break
        if associated_primes(g) != ass_oracle(I):
            ok = False
            break
    _report(5, "decomposition identity and associated-primes oracle", ok)


def test_criterion_06_dual_polarization_identity():
    ok = True
    for g in _full_corpus():
        touched = {v for arc in g.arcs for v in arc}
        if not g.arcs or touched != set(g.vertices):
            continue
        gd = g_superscript_d(g)
        lhs = alexander_dual(polarize_ideal(alexander_dual(edge_ideal(g))))
        rhs = edge_ideal(new_graph(gd.vertices, [1] * len(gd.vertices),
                                   [tuple(sorted(e)) for e in gd.edges]))
        if lhs != rhs:
            ok = False
            break
    _report(6, "dual-of-polarized-dual identity", ok)


def test_criterion_07_cycle_path_classifiers_vs_oracle():
    ok = True
    for n in (3, 4, 5):
        for g in corpus.all_cycles(n, weights=(1, 2)):
            if classify_cycle_cm(g).is_cm != is_cm_oracle(edge_ideal(g)).is_cm:
                ok = False
            if classify_cycle_unmixed(g) != is_unmixed(g):
                ok = False
    for n in (2, 3, 4, 5):
        for g in corpus.all_paths(n, weights=(1, 2)):
            if classify_path(g).is_cm != is_cm_oracle(edge_ideal(g)).is_cm:
                ok = False
    _report(7, "cycle and path classifiers vs oracle", ok)


def test_criterion_08_whisker_equivalences():
    ok = True
    for g in corpus.whisker_instances(100, base_n_max=4, seed=7):
        a = is_cm_oracle(edge_ideal(g)).is_cm
        b = is_unmixed(g)
        c = classify_whisker(g).is_cm
        if not (a == b == c):
            ok = False
            break
    _report(8, "whisker equivalences against the oracle", ok)


def test_criterion_09_dual_cm_implications():
    ok = True
    converse_witnesses = []
    for g in _full_corpus():
        touched = {v for arc in g.arcs for v in arc}
        if not g.arcs or touched != set(g.vertices):
            continue
        d = dual_is_cm(g)
        chordal = is_chordal(complement(underlying(g)))
        if d and not chordal:
            ok = False
            break
        star, _ = property_star_exists(g)
        if chordal and star and not d:
            ok = False
            break
        if d and not (chordal and star):
            converse_witnesses.append((g.weights, sorted(g.arcs)))
    if converse_witnesses:
        print(f"converse counterexamples found: {converse_witnesses}")
    _report(9, "dual Cohen-Macaulayness vs chordality implications", ok)


def test_criterion_10_conjecture_sweep():
    pairs = []
    counter = itertools.count()
    for n in (3, 4, 5):
        for g in corpus.all_cycles(n, weights=(1, 2)):
            pairs.append((f"cycle-{next(counter)}", g))
    for n in (2, 3, 4, 5):
        for g in corpus.all_paths(n, weights=(1, 2)):
            pairs.append((f"path-{next(counter)}", g))
    for g in corpus.random_instances(100, n_max=5, w_max=2, seed=11):
        pairs.append((f"random-{next(counter)}", g))
    report = verify_conjecture(pairs, with_dual=False)
    ok = report["violations"] == [] and report["instances"] == len(pairs)
    _report(10, "Cohen-Macaulay conjecture sweep", ok)


def test_criterion_11_oracle_baseline_cycles():
    ok = True
    for n in range(3, 8):
        verts = [f"x{i}" for i in range(n)]
        arcs = [(verts[i], verts[(i + 1) % n]) for i in range(n)]
        g = new_graph(verts, [1] * n, arcs)
        if is_cm_oracle(edge_ideal(g)).is_cm != (n in (3, 5)):
            ok = False
    _report(11, "oracle baseline on square-free cycles", ok)
