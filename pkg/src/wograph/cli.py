"""Command line interface.

Every subcommand reads a graph as JSON (a file path or ``-`` for stdin),
writes a JSON result to stdout and structured errors to stderr. Exit status
is 0 on success, 2 on invalid input and 3 when a size cap is hit. The
``verify`` sweep additionally writes a CSV evidence table and a summary
figure next to it.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import alexander, chordal, cm, corpus, covers, decomp, polarize
from .errors import InputError, TooLarge, WographError
from .graph import (
    VOGraph,
    complement,
    first_construction,
    graph_from_json,
    graph_to_dict,
    second_construction,
    underlying,
)
from .ideal import (
    edge_ideal,
    exponent_ideal_to_str,
    ideal_to_strs,
)

CSV_FIELDS = ["instance_id", "n", "weights", "arcs", "unmixed", "cm_oracle",
              "cm_underlying", "conjecture_ok", "dual_cm", "gbar_chordal",
              "star_exists"]


def _read_graph(path: str) -> VOGraph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return graph_from_json(text)


def _emit(data, pretty: bool):
    json.dump(data, sys.stdout, indent=2 if pretty else None, sort_keys=True)
    sys.stdout.write("\n")


def cmd_show(args):
    g = _read_graph(args.graph)
    return {
        "graph": graph_to_dict(g),
        "edge_ideal": ideal_to_strs(edge_ideal(g)),
    }


def cmd_decompose(args):
    g = _read_graph(args.graph)
    dec = decomp.primary_decomposition(g)
    return {
        "ambient": list(dec.ambient),
        "components": [
            {
                "cover": sorted(C),
                "ideal": exponent_ideal_to_str(dec.ambient, comp.b),
                "exponents": list(comp.b),
            }
            for C, comp in dec.components
        ],
    }


def cmd_ass(args):
    g = _read_graph(args.graph)
    primes = decomp.associated_primes(g)
    return {"associated_primes": sorted(sorted(p) for p in primes)}


def cmd_is_unmixed(args):
    g = _read_graph(args.graph)
    h = covers.heights(g)
    return {
        "unmixed": covers.is_unmixed(g),
        "min_height": h.min_height,
        "max_height": h.max_height,
    }


def cmd_dual(args):
    g = _read_graph(args.graph)
    I = edge_ideal(g)
    a = tuple(int(x) for x in args.a.split(",")) if args.a else None
    D = alexander.alexander_dual(I, a)
    return {
        "ambient": list(D.ambient),
        "generators": ideal_to_strs(D),
        "exponents": [list(e) for e in D.sorted_gens()],
    }


def cmd_polarize(args):
    g = _read_graph(args.graph)
    P = polarize.polarize_ideal(edge_ideal(g))
    return {
        "ambient": list(P.ambient),
        "generators": ideal_to_strs(P),
    }


def cmd_gd(args):
    g = _read_graph(args.graph)
    gd = polarize.g_superscript_d(g)
    return {
        "vertices": list(gd.vertices),
        "edges": sorted(sorted(e) for e in gd.edges),
    }


def cmd_dual_cm(args):
    g = _read_graph(args.graph)
    out = {
        "dual_cm": chordal.dual_is_cm(g),
        "gbar_chordal": chordal.is_chordal(complement(underlying(g))),
    }
    try:
        found, witness = chordal.property_star_exists(g)
        out["star"] = "holds" if found else "fails"
        out["witness_ordering"] = list(witness) if witness else None
    except TooLarge:
        out["star"] = "unknown"
        out["witness_ordering"] = None
    return out


def cmd_is_cm(args):
    g = _read_graph(args.graph)
    field = cm.FIELD_GF2 if args.field == "f2" else cm.FIELD_RATIONALS
    if args.method == "oracle":
        rep = cm.is_cm_oracle(edge_ideal(g), field)
    else:
        rep = cm.is_cm_auto(g, field)
    return {"is_cm": rep.is_cm, "method": rep.method,
            "certificate": rep.certificate}


def cmd_classify_cycle(args):
    g = _read_graph(args.graph)
    rep = cm.classify_cycle_cm(g)
    return {
        "unmixed": cm.classify_cycle_unmixed(g),
        "cm": rep.is_cm,
        "method": rep.method,
        "certificate": rep.certificate,
    }


def cmd_classify_path(args):
    g = _read_graph(args.graph)
    rep = cm.classify_path(g)
    return {"cm": rep.is_cm, "unmixed": rep.is_cm, "method": rep.method,
            "certificate": rep.certificate}


def cmd_construct(args):
    g = _read_graph(args.graph)
    choices = json.loads(args.arc_choices) if args.arc_choices else None
    if args.kind == "first":
        h = first_construction(g, args.attach.split(","),
                               z_weight=args.z_weight,
                               arc_choices=choices)
    else:
        h = second_construction(g, args.attach.split(","),
                                z_weight=args.z_weight,
                                arc_choices=choices)
    return graph_to_dict(h)


def _write_figure(rows, path: Path, family: str):
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    keys = ["unmixed", "cm_oracle", "cm_underlying", "conjecture_ok"]
    counts = [sum(1 for r in rows if r[k]) for k in keys]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(keys, counts, color=["#4878d0", "#ee854a", "#6acc64", "#956cb4"])
    ax.set_ylabel("instances")
    ax.set_title(f"family={family}, {len(rows)} instances")
    for i, c in enumerate(counts):
        ax.text(i, c, str(c), ha="center", va="bottom")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def cmd_verify(args):
    pairs = corpus.family(args.family, max_n=args.max_n, max_w=args.max_w,
                          seed=args.seed, count=args.count)
    field = cm.FIELD_GF2 if args.field == "f2" else cm.FIELD_RATIONALS
    report = cm.verify_conjecture(pairs, field=field,
                                  with_dual=not args.no_dual)
    csv_path = Path(args.csv)
    with csv_path.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS)
        writer.writeheader()
        for row in report["rows"]:
            writer.writerow(row)
    figure_path = Path(args.figure) if args.figure \
        else csv_path.with_suffix(".png")
    if not args.no_figure:
        _write_figure(report["rows"], figure_path, args.family)
    return {
        "family": args.family,
        "instances": report["instances"],
        "violations": report["violations"],
        "csv": str(csv_path),
        "figure": str(figure_path) if not args.no_figure else None,
    }


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="wograph",
        description="Edge ideals of weighted oriented graphs: decomposition, "
                    "duality, Cohen-Macaulayness.")
    p.add_argument("--pretty", action="store_true",
                   help="indent the JSON output")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, graph_arg=True):
        sp = sub.add_parser(name, help=help_text)
        if graph_arg:
            sp.add_argument("graph", help="graph JSON file, or - for stdin")
        sp.set_defaults(fn=fn)
        return sp

    add("show", cmd_show, "validate a graph and print it with its edge ideal")
    add("decompose", cmd_decompose,
        "irreducible decomposition via strong vertex covers")
    add("ass", cmd_ass, "associated primes (as variable supports)")
    add("is-unmixed", cmd_is_unmixed, "unmixedness and height range")
    sp = add("dual", cmd_dual, "Alexander dual of the edge ideal")
    sp.add_argument("--a", help="comma-separated dual vector, default a_I")
    add("polarize", cmd_polarize, "polarization of the edge ideal")
    add("gd", cmd_gd, "the copy-variable graph of the dual")
    add("dual-cm", cmd_dual_cm,
        "Cohen-Macaulayness of the dual via chordality, with the ordering "
        "condition status")
    sp = add("is-cm", cmd_is_cm, "Cohen-Macaulayness of the edge ideal")
    sp.add_argument("--method", choices=["oracle", "auto"], default="auto")
    sp.add_argument("--field", choices=["q", "f2"], default="q")
    add("classify-cycle", cmd_classify_cycle,
        "unmixedness and Cohen-Macaulayness of a weighted oriented cycle")
    add("classify-path", cmd_classify_path,
        "Cohen-Macaulayness of a weighted oriented path")
    sp = add("construct", cmd_construct,
             "attach a hub vertex (and optionally a leaf) to a graph")
    sp.add_argument("--kind", choices=["first", "second"], required=True)
    sp.add_argument("--attach", required=True,
                    help="comma-separated attach vertices")
    sp.add_argument("--z-weight", type=int, default=1)
    sp.add_argument("--arc-choices",
                    help='JSON map vertex -> "to_z"/"from_z"')
    sp = add("verify", cmd_verify,
             "sweep a corpus and compare the oracle against the "
             "unmixed + underlying criterion", graph_arg=False)
    sp.add_argument("--family", required=True,
                    choices=["cycles", "paths", "whiskers", "random",
                             "exhaustive"])
    sp.add_argument("--max-n", type=int, default=5)
    sp.add_argument("--max-w", type=int, default=2)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=50)
    sp.add_argument("--field", choices=["q", "f2"], default="q")
    sp.add_argument("--csv", required=True, help="evidence table output path")
    sp.add_argument("--figure", help="summary figure path (default: CSV "
                                     "path with .png)")
    sp.add_argument("--no-figure", action="store_true")
    sp.add_argument("--no-dual", action="store_true",
                    help="skip the dual-side columns")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.fn(args)
    except TooLarge as exc:
        json.dump({"error": exc.code, "detail": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 3
    except (InputError, WographError, OSError, ValueError,
            json.JSONDecodeError) as exc:
        code = exc.code if isinstance(exc, WographError) else type(exc).__name__
        json.dump({"error": code, "detail": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 2
    _emit(result, args.pretty)
    return 0


if __name__ == "__main__":
    sys.exit(main())
