"""Weighted oriented graphs: construction, validation, transforms, patterns.

A weighted oriented graph is a directed graph with a simple underlying graph
and a positive integer weight on each vertex; every source vertex must have
weight 1. All values are immutable and all operations are pure.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .errors import (
    AntiparallelArcs,
    ConstructionShapeViolation,
    DuplicateVertex,
    EmptyAttachSet,
    NonPositiveWeight,
    NotAFiveCycle,
    RuleReferencesUnknownVertex,
    SelfLoop,
    SourceWeightNotOne,
    UnknownVertex,
)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on labelled vertices."""

    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]]

    def __post_init__(self):
        known = set(self.vertices)
        if len(known) != len(self.vertices):
            raise DuplicateVertex("duplicate vertex label")
        for e in self.edges:
            if len(e) != 2:
                raise SelfLoop(f"not a proper edge: {set(e)}")
            if not e <= known:
                raise UnknownVertex(f"edge {set(e)} references unknown vertex")

    def neighbors(self, v: str) -> frozenset[str]:
        if v not in self.vertices:
            raise UnknownVertex(v)
        return frozenset(u for e in self.edges if v in e for u in e if u != v)

    def has_edge(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self.edges

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))


@dataclass(frozen=True)
class VOGraph:
    """Weighted oriented graph; ``arcs`` are ordered (source, target) pairs."""

    vertices: tuple[str, ...]
    weights: tuple[int, ...]
    arcs: frozenset[tuple[str, str]]

    def weight(self, v: str) -> int:
        try:
            return self.weights[self.vertices.index(v)]
        except ValueError:
            raise UnknownVertex(v) from None

    @property
    def weight_map(self) -> dict[str, int]:
        return dict(zip(self.vertices, self.weights))

    def in_arcs(self, v: str) -> frozenset[tuple[str, str]]:
        return frozenset(a for a in self.arcs if a[1] == v)

    def out_arcs(self, v: str) -> frozenset[tuple[str, str]]:
        return frozenset(a for a in self.arcs if a[0] == v)

    def neighbors(self, v: str) -> frozenset[str]:
        if v not in self.vertices:
            raise UnknownVertex(v)
        return frozenset(u for a in self.arcs for u in a if v in a and u != v)


@dataclass(frozen=True)
class VertexClasses:
    sources: frozenset[str]
    sinks: frozenset[str]
    v_plus: frozenset[str]


def new_graph(vertices, weights, arcs, normalize_sources: bool = False) -> VOGraph:
    """Build a validated VOGraph.

    ``weights`` is a mapping label -> weight or a sequence aligned with
    ``vertices``. With ``normalize_sources`` a source of weight != 1 is
    silently reset to 1 (this never changes the edge ideal); by default it is
    rejected.
    """
    vertices = tuple(vertices)
    if len(set(vertices)) != len(vertices):
        raise DuplicateVertex("duplicate vertex label")
    if isinstance(weights, dict):
        missing = [v for v in vertices if v not in weights]
        if missing:
            raise UnknownVertex(f"no weight for {missing}")
        wts = [weights[v] for v in vertices]
    else:
        wts = list(weights)
        if len(wts) != len(vertices):
            raise NonPositiveWeight("weight list length mismatch")
    for v, w in zip(vertices, wts):
        if not isinstance(w, int) or w < 1:
            raise NonPositiveWeight(f"w({v}) = {w}")
    known = set(vertices)
    arcset = set()
    for a in arcs:
        u, v = a
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        if u not in known or v not in known:
            raise UnknownVertex(f"arc ({u}, {v}) references unknown vertex")
        if (v, u) in arcset:
            raise AntiparallelArcs(f"both ({u},{v}) and ({v},{u}) present")
        arcset.add((u, v))
    # source convention: any vertex with only outgoing arcs carries weight 1
    for i, v in enumerate(vertices):
        outgoing = any(a[0] == v for a in arcset)
        incoming = any(a[1] == v for a in arcset)
        if outgoing and not incoming and wts[i] != 1:
            if normalize_sources:
                wts[i] = 1
            else:
                raise SourceWeightNotOne(f"source {v} has weight {wts[i]}")
    return VOGraph(vertices, tuple(wts), frozenset(arcset))


def new_simple_graph(vertices, edges) -> SimpleGraph:
    return SimpleGraph(tuple(vertices), frozenset(frozenset(e) for e in edges))


def underlying(g: VOGraph) -> SimpleGraph:
    """Forget orientation and weights."""
    return SimpleGraph(g.vertices, frozenset(frozenset(a) for a in g.arcs))


def complement(g: SimpleGraph) -> SimpleGraph:
    edges = frozenset(
        frozenset(p)
        for p in itertools.combinations(g.vertices, 2)
        if frozenset(p) not in g.edges
    )
    return SimpleGraph(g.vertices, edges)


def classify_vertices(g: VOGraph) -> VertexClasses:
    """Sources, sinks (non-isolated by definition) and the weight-!= 1 set."""
    sources, sinks = set(), set()
    for v in g.vertices:
        outgoing = any(a[0] == v for a in g.arcs)
        incoming = any(a[1] == v for a in g.arcs)
        if outgoing and not incoming:
            sources.add(v)
        elif incoming and not outgoing:
            sinks.add(v)
    v_plus = frozenset(v for v, w in zip(g.vertices, g.weights) if w != 1)
    return VertexClasses(frozenset(sources), frozenset(sinks), v_plus)


def delete_vertices(g: VOGraph, remove) -> VOGraph:
    """Induced weighted oriented subgraph on the complement of ``remove``."""
    remove = set(remove)
    unknown = remove - set(g.vertices)
    if unknown:
        raise UnknownVertex(f"{sorted(unknown)}")
    keep = tuple(v for v in g.vertices if v not in remove)
    wts = tuple(w for v, w in zip(g.vertices, g.weights) if v not in remove)
    arcs = frozenset(a for a in g.arcs if a[0] not in remove and a[1] not in remove)
    # deletion can create sources with stale weights; the ideal is unchanged
    # by resetting them, so normalize instead of rejecting
    return new_graph(keep, wts, arcs, normalize_sources=True)


def add_whiskers(g: VOGraph, orientation_rule=None, leaf_weights=None,
                 leaf_prefix: str = "y_") -> VOGraph:
    """Attach one leaf per vertex; leaf of ``v`` is named ``y_<v>``.

    ``orientation_rule`` maps a vertex to "in" (leaf -> vertex) or "out"
    (vertex -> leaf); default is "in" everywhere, which always yields a graph
    passing the whisker Cohen-Macaulay criterion. "out" at a vertex of weight
    != 1 is accepted here and rejected only by the downstream classifier.
    """
    rule = dict(orientation_rule or {})
    unknown = set(rule) - set(g.vertices)
    if unknown:
        raise RuleReferencesUnknownVertex(f"{sorted(unknown)}")
    leaf_weights = dict(leaf_weights or {})
    vertices = list(g.vertices)
    wts = list(g.weights)
    arcs = set(g.arcs)
    for v in g.vertices:
        leaf = leaf_prefix + v
        if leaf in vertices:
            raise DuplicateVertex(f"leaf label {leaf} already in use")
        direction = rule.get(v, "in")
        vertices.append(leaf)
        if direction == "out":
            arcs.add((v, leaf))
            wts.append(leaf_weights.get(v, 1))
        else:
            arcs.add((leaf, v))
            wts.append(1)  # leaf becomes a source
    return new_graph(vertices, wts, arcs)


def first_construction(g: VOGraph, attach, z_weight: int = 1, y_weight: int = 1,
                       arc_choices=None, z_label: str = "z",
                       y_label: str = "y") -> VOGraph:
    """Add a hub ``z`` (attached to every vertex in ``attach``) plus a leaf
    ``y`` adjacent only to ``z``.

    ``arc_choices`` maps each attach vertex to "to_z"/"from_z" and the key
    ``y_label`` to the direction of the z--y edge ("to_z" means (y, z)).
    With ``z_weight != 1`` every attach arc must point into z.
    """
    attach = list(attach)
    if not attach:
        raise EmptyAttachSet("attach set is empty")
    unknown = set(attach) - set(g.vertices)
    if unknown:
        raise UnknownVertex(f"{sorted(unknown)}")
    choices = dict(arc_choices or {})
    for label in (z_label, y_label):
        if label in g.vertices:
            raise DuplicateVertex(f"label {label} already in use")
    vertices = list(g.vertices) + [z_label, y_label]
    wts = list(g.weights) + [z_weight, y_weight]
    arcs = set(g.arcs)
    for x in attach:
        direction = choices.get(x, "to_z")
        if direction == "from_z":
            if z_weight != 1:
                raise ConstructionShapeViolation(
                    f"arc ({z_label},{x}) requires w(z)=1")
            arcs.add((z_label, x))
        else:
            arcs.add((x, z_label))
    if choices.get(y_label, "to_z") == "to_z":
        arcs.add((y_label, z_label))
    else:
        arcs.add((z_label, y_label))
    return new_graph(vertices, wts, arcs, normalize_sources=True)


def second_construction(g: VOGraph, attach, z_weight: int = 1,
                        arc_choices=None, z_label: str = "z") -> VOGraph:
    """As :func:`first_construction` but without the extra leaf ``y``."""
    attach = list(attach)
    if not attach:
        raise EmptyAttachSet("attach set is empty")
    unknown = set(attach) - set(g.vertices)
    if unknown:
        raise UnknownVertex(f"{sorted(unknown)}")
    choices = dict(arc_choices or {})
    if z_label in g.vertices:
        raise DuplicateVertex(f"label {z_label} already in use")
    vertices = list(g.vertices) + [z_label]
    wts = list(g.weights) + [z_weight]
    arcs = set(g.arcs)
    for x in attach:
        direction = choices.get(x, "to_z")
        if direction == "from_z":
            if z_weight != 1:
                raise ConstructionShapeViolation(
                    f"arc ({z_label},{x}) requires w(z)=1")
            arcs.add((z_label, x))
        else:
            arcs.add((x, z_label))
    return new_graph(vertices, wts, arcs, normalize_sources=True)


# ---------------------------------------------------------------------------
# five-cycle patterns

WEIGHT_ONE = "weight-one"
WEIGHT_MANY = "weight-many"
ANY = "any"
FORWARD = "forward"
BACKWARD = "backward"


@dataclass(frozen=True)
class CyclePattern:
    """A five-cycle template matched up to the 10 dihedral symmetries.

    ``arc_class[i]`` constrains the edge between positions i and i+1 (mod 5);
    "forward" means the arc goes from position i to position i+1.
    """

    name: str
    vertex_class: tuple[str, ...]
    arc_class: tuple[str, ...]

    def __post_init__(self):
        assert len(self.vertex_class) == 5 and len(self.arc_class) == 5


def _pat(name, vc, ac):
    return CyclePattern(name, tuple(vc), tuple(ac))


#: The unmixed-cycle catalog. D1-D4 are load-bearing for the cycle
#: classifiers; D5-D8 are shipped for tests only. Unannotated weights and
#: undirected edges are encoded as "any".
PATTERNS: dict[str, CyclePattern] = {
    "D1": _pat("D1",
               [WEIGHT_ONE, WEIGHT_ONE, WEIGHT_MANY, WEIGHT_ONE, WEIGHT_MANY],
               [ANY, BACKWARD, BACKWARD, FORWARD, FORWARD]),
    "D2": _pat("D2",
               [WEIGHT_ONE, WEIGHT_ONE, WEIGHT_ONE, WEIGHT_MANY, WEIGHT_MANY],
               [ANY, ANY, BACKWARD, BACKWARD, BACKWARD]),
    "D3": _pat("D3",
               [WEIGHT_ONE, WEIGHT_ONE, WEIGHT_MANY, WEIGHT_MANY, WEIGHT_MANY],
               [ANY, ANY, BACKWARD, BACKWARD, BACKWARD]),
    "D4": _pat("D4",
               [WEIGHT_ONE, WEIGHT_MANY, WEIGHT_MANY, WEIGHT_ONE, WEIGHT_MANY],
               [FORWARD, FORWARD, BACKWARD, FORWARD, ANY]),
    "D5": _pat("D5",
               [WEIGHT_ONE, WEIGHT_ONE, ANY, WEIGHT_ONE, ANY],
               [ANY, FORWARD, BACKWARD, FORWARD, FORWARD]),
    "D6": _pat("D6",
               [WEIGHT_ONE, WEIGHT_ONE, ANY, ANY, ANY],
               [ANY, FORWARD, BACKWARD, FORWARD, BACKWARD]),
    "D7": _pat("D7",
               [WEIGHT_ONE, WEIGHT_ONE, ANY, ANY, ANY],
               [ANY, ANY, FORWARD, BACKWARD, ANY]),
    "D8": _pat("D8",
               [WEIGHT_ONE, WEIGHT_ONE, WEIGHT_ONE, WEIGHT_MANY, WEIGHT_ONE],
               [ANY, ANY, ANY, ANY, ANY]),
}


def cycle_order(sg: SimpleGraph) -> list[str] | None:
    """Vertices of ``sg`` in cyclic order, or None if not a single cycle."""
    n = len(sg.vertices)
    if n < 3 or len(sg.edges) != n:
        return None
    if any(sg.degree(v) != 2 for v in sg.vertices):
        return None
    order = [sg.vertices[0]]
    prev = None
    while len(order) < n:
        nxt = [u for u in sg.neighbors(order[-1]) if u != prev]
        if not nxt:
            return None
        prev = order[-1]
        order.append(nxt[0])
    if not sg.has_edge(order[-1], order[0]):
        return None
    return order


def match_pattern(g: VOGraph, pattern: CyclePattern) -> bool:
    """True iff some dihedral alignment of the 5-cycle fits the pattern."""
    order = cycle_order(underlying(g))
    if order is None or len(order) != 5:
        raise NotAFiveCycle("underlying graph is not a 5-cycle")
    wmap = g.weight_map
    for start in range(5):
        for step in (1, -1):
            seq = [order[(start + step * i) % 5] for i in range(5)]
            ok = True
            for i in range(5):
                vc = pattern.vertex_class[i]
                if vc == WEIGHT_ONE and wmap[seq[i]] != 1:
                    ok = False
                    break
                if vc == WEIGHT_MANY and wmap[seq[i]] == 1:
                    ok = False
                    break
            if not ok:
                continue
            for i in range(5):
                ac = pattern.arc_class[i]
                u, v = seq[i], seq[(i + 1) % 5]
                if ac == FORWARD and (u, v) not in g.arcs:
                    ok = False
                    break
                if ac == BACKWARD and (v, u) not in g.arcs:
                    ok = False
                    break
            if ok:
                return True
    return False


# ---------------------------------------------------------------------------
# JSON interchange

def graph_to_dict(g: VOGraph) -> dict:
    return {
        "vertices": [{"id": v, "weight": w} for v, w in zip(g.vertices, g.weights)],
        "edges": [[u, v] for u, v in sorted(g.arcs)],
    }


def graph_from_dict(d: dict, normalize_sources: bool = False) -> VOGraph:
    try:
        vertices = [v["id"] for v in d["vertices"]]
        weights = {v["id"]: v.get("weight", 1) for v in d["vertices"]}
        edges = [tuple(e) for e in d.get("edges", [])]
    except (KeyError, TypeError) as exc:
        raise UnknownVertex(f"malformed graph JSON: {exc}") from exc
    return new_graph(vertices, weights, edges, normalize_sources=normalize_sources)


def graph_to_json(g: VOGraph) -> str:
    return json.dumps(graph_to_dict(g))


def graph_from_json(text: str, normalize_sources: bool = False) -> VOGraph:
    return graph_from_dict(json.loads(text), normalize_sources=normalize_sources)
