"""Instance generation for sweeps and tests.

Exhaustive families are deduplicated up to relabelling by a canonical key
(the minimum over all vertex permutations of the sorted arc/weight data);
random families are deterministic in the seed.
"""
from __future__ import annotations

import itertools
import random

from .errors import SourceWeightNotOne
from .graph import VOGraph, add_whiskers, new_graph


def _labels(n: int) -> list[str]:
    return [f"x{i + 1}" for i in range(n)]


def canonical_key(g: VOGraph):
    """Isomorphism-invariant key: minimize over all vertex permutations."""
    n = len(g.vertices)
    idx = {v: i for i, v in enumerate(g.vertices)}
    arcs = [(idx[u], idx[v]) for u, v in g.arcs]
    best = None
    for perm in itertools.permutations(range(n)):
        key = (
            tuple(sorted((perm[u], perm[v]) for u, v in arcs)),
            tuple(g.weights[perm.index(i)] for i in range(n)),
        )
        if best is None or key < best:
            best = key
    return (n, *best)


def all_graphs(n: int, weights=(1, 2), require_edges: bool = True,
               no_isolated: bool = False):
    """Every weighted oriented graph on n vertices up to relabelling.

    Weights range over ``weights``; labelings giving a source of weight != 1
    are skipped (the same ideal arises from the weight-one labeling).
    """
    verts = _labels(n)
    pairs = list(itertools.combinations(verts, 2))
    seen = set()
    for edge_mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if edge_mask >> i & 1]
        if require_edges and not edges:
            continue
        if no_isolated:
            touched = {v for e in edges for v in e}
            if touched != set(verts):
                continue
        for flips in itertools.product((0, 1), repeat=len(edges)):
            arcs = [(u, v) if f == 0 else (v, u)
                    for (u, v), f in zip(edges, flips)]
            for wts in itertools.product(weights, repeat=n):
                try:
                    g = new_graph(verts, wts, arcs)
                except SourceWeightNotOne:
                    continue
                key = canonical_key(g)
                if key in seen:
                    continue
                seen.add(key)
                yield g


def all_cycles(n: int, weights=(1, 2, 3)):
    """Every weighted oriented cycle of length n up to relabelling."""
    verts = _labels(n)
    edges = [(verts[i], verts[(i + 1) % n]) for i in range(n)]
    seen = set()
    for flips in itertools.product((0, 1), repeat=n):
        arcs = [(u, v) if f == 0 else (v, u) for (u, v), f in zip(edges, flips)]
        for wts in itertools.product(weights, repeat=n):
            try:
                g = new_graph(verts, wts, arcs)
            except SourceWeightNotOne:
                continue
            key = canonical_key(g)
            if key in seen:
                continue
            seen.add(key)
            yield g


def all_paths(n: int, weights=(1, 2, 3)):
    """Every weighted oriented path on n vertices up to relabelling."""
    verts = _labels(n)
    edges = [(verts[i], verts[i + 1]) for i in range(n - 1)]
    seen = set()
    for flips in itertools.product((0, 1), repeat=n - 1):
        arcs = [(u, v) if f == 0 else (v, u) for (u, v), f in zip(edges, flips)]
        for wts in itertools.product(weights, repeat=n):
            try:
                g = new_graph(verts, wts, arcs)
            except SourceWeightNotOne:
                continue
            key = canonical_key(g)
            if key in seen:
                continue
            seen.add(key)
            yield g


def random_instance(rng: random.Random, n_max: int, w_max: int,
                    no_isolated: bool = False, min_n: int = 2) -> VOGraph:
    """One random weighted oriented graph; retries until validation passes."""
    while True:
        n = rng.randint(min_n, n_max)
        verts = _labels(n)
        pairs = list(itertools.combinations(verts, 2))
        arcs = []
        for u, v in pairs:
            roll = rng.random()
            if roll < 0.3:
                arcs.append((u, v))
            elif roll < 0.6:
                arcs.append((v, u))
        if not arcs:
            continue
        if no_isolated:
            touched = {x for a in arcs for x in a}
            if touched != set(verts):
                continue
        wts = [rng.randint(1, w_max) for _ in verts]
        try:
            return new_graph(verts, wts, arcs)
        except SourceWeightNotOne:
            continue


def random_instances(count: int, n_max: int, w_max: int, seed: int,
                     no_isolated: bool = False, min_n: int = 2):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_instance(rng, n_max, w_max, no_isolated=no_isolated,
                              min_n=min_n)


def random_whisker(rng: random.Random, base_n_max: int, w_max: int = 2,
                   allow_bad_orientation: bool = True) -> VOGraph:
    """A random base graph with one whisker per vertex.

    With ``allow_bad_orientation`` some whiskers may point outward from a
    weight-!= 1 vertex, producing instances failing the whisker criterion.
    """
    while True:
        base = random_instance(rng, base_n_max, w_max, min_n=2)
        rule = {}
        for v in base.vertices:
            if allow_bad_orientation and rng.random() < 0.4:
                rule[v] = "out"
        try:
            return add_whiskers(base, orientation_rule=rule)
        except SourceWeightNotOne:
            continue


def whisker_instances(count: int, base_n_max: int, seed: int, w_max: int = 2,
                      allow_bad_orientation: bool = True):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_whisker(rng, base_n_max, w_max=w_max,
                             allow_bad_orientation=allow_bad_orientation)


def family(name: str, max_n: int, max_w: int, seed: int, count: int):
    """Named corpora for the sweep command; yields (instance_id, graph)."""
    if name == "cycles":
        gen = (g for n in range(3, max_n + 1)
               for g in all_cycles(n, weights=tuple(range(1, max_w + 1))))
    elif name == "paths":
        gen = (g for n in range(2, max_n + 1)
               for g in all_paths(n, weights=tuple(range(1, max_w + 1))))
    elif name == "whiskers":
        gen = whisker_instances(count, base_n_max=max(2, max_n // 2),
                                seed=seed, w_max=min(max_w, 2))
    elif name == "random":
        gen = random_instances(count, n_max=max_n, w_max=min(max_w, 2),
                               seed=seed)
    elif name == "exhaustive":
        gen = (g for n in range(2, max_n + 1)
               for g in all_graphs(n, weights=tuple(range(1, max_w + 1))))
    else:
        raise ValueError(f"unknown family {name!r}")
    for i, g in enumerate(gen):
        yield f"{name}-{i:04d}", g
