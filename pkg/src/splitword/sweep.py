"""Exhaustive and sampled sweeps that cross-check every module on many graphs."""

from __future__ import annotations

import os
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from itertools import islice

from .errors import NotSplit, SplitWordError
from .graph import Graph, encode_graph6, find_induced, parse_graph6
from .labelling import (
    CliqueLabelling,
    IClassification,
    VertexClass,
    classify,
    find_labelling,
    orientation_from_labelling,
    verify_properties,
)
from .orientation import (
    enumerate_transitive_orientations,
    find_transitive_orientation,
    verify_semi_transitive,
    verify_transitive,
)
from .poset import DIMENSION_MAX_ELEMENTS, ORACLE_MAX_VERTICES, dimension, poset_from_orientation, prn, prn_oracle
from .split import B4, NON_COMPARABILITY, OBSTRUCTIONS, SplitGraph, find_forbidden, normalize_maximal, split_partition
from .words import build_word, is_permutation, pair_report, represents, restrict, uniformity

EXHAUSTIVE_MAX_N = 6
SAMPLE_MAX_N = 10
WORKERS_ENV = "SPLITWORD_WORKERS"


class SweepFailure(SplitWordError):
    def __init__(self, graph6, check, detail=""):
        self.graph6 = graph6
        self.check = check
        self.detail = detail
        super().__init__(f"check {check!r} failed on {graph6!r} {detail}".rstrip())


def _fail(g: Graph, check: str, detail: str = ""):
    raise SweepFailure(encode_graph6(g), check, detail)


def check_graph(g: Graph) -> dict:
    """Run every cross-check on ``g``; raise :class:`SweepFailure` on the first disagreement.

    Returns ``{"split": bool, "comparability": bool, "prn": int | None}``.
    """
    record = {"split": False, "comparability": False, "prn": None}
    obstruction = next((n for n, p in OBSTRUCTIONS.items() if find_induced(g, p) is not None), None)
    try:
        sg = split_partition(g)
    except NotSplit:
        if obstruction is None:
            _fail(g, "split-recognition", "rejected without an induced 2K2/C4/C5")
        return record
    if obstruction is not None:
        _fail(g, "split-recognition", f"accepted despite induced {obstruction}")
    record["split"] = True
    sg.validate()
    if normalize_maximal(sg) != sg:
        _fail(g, "normalize-idempotent")

    found = find_labelling(sg)
    forced = find_transitive_orientation(g)
    brute = next(enumerate_transitive_orientations(g), None)
    forbidden = find_forbidden(g, NON_COMPARABILITY)
    verdicts = (found is not None, forced is not None, brute is not None, forbidden is None)
    if len(set(verdicts)) != 1:
        _fail(g, "characterization", f"labelling/forcing/brute-force/B-free = {verdicts}")
    if found is None:
        return record
    record["comparability"] = True

    if not (verify_transitive(g, forced) and verify_semi_transitive(g, forced)):
        _fail(g, "orientation-verifiers")
    # forward direction: the clique order of any transitive orientation is a valid labelling
    lab = CliqueLabelling.from_orientation(sg, forced)
    if verify_properties(classify(sg, lab), lab.k):
        _fail(g, "labelling-round-trip")

    lab, cls = found
    if not verify_transitive(g, orientation_from_labelling(sg, lab, cls)):
        _fail(g, "labelling-converse")

    blocks = build_word(sg, lab, cls)
    z = blocks.z
    if not all(is_permutation(q, g.n) for q in blocks):
        _fail(g, "word-permutations")
    if g.n and uniformity(z) != 3:
        _fail(g, "word-uniformity")
    if not represents(z, g) or not all(pair_report(z, sg).values()):
        _fail(g, "word-represents")
    if restrict(z, lab.order) != lab.order * 3:
        _fail(g, "word-clique-restriction")

    result = prn(g)
    if not result.verify(g):
        _fail(g, "prn-certificate")
    if (result.value == 3) != (find_induced(g, B4) is not None):
        _fail(g, "prn-b4")
    if g.n <= DIMENSION_MAX_ELEMENTS:
        dim = dimension(poset_from_orientation(forced), cap=4)
        if dim != result.value or dim > 3:
            _fail(g, "dimension-bridge", f"dimension {dim} vs prn {result.value}")
    if g.n <= ORACLE_MAX_VERTICES:
        least = next((k for k in (1, 2, 3) if prn_oracle(g, k)), None)
        if least != result.value:
            _fail(g, "prn-oracle", f"oracle {least} vs prn {result.value}")
    record["prn"] = result.value
    return record


def all_graphs(n: int):
    """Every labelled graph on ``n`` vertices, edge bits in graph6 order."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for code in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for b, p in enumerate(pairs) if code >> b & 1])


def random_split_graph(rng: random.Random, n: int) -> Graph:
    k = rng.randint(1, max(1, n - 1))
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    p = rng.uniform(0.2, 0.8)
    edges += [(c, a) for a in range(k, n) for c in range(k) if rng.random() < p]
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, edges).relabel(perm)


def _random_class(rng: random.Random, vertex: int, k: int) -> VertexClass | None:
    kinds = ["A2", "A3"] + (["A1"] if k >= 3 else [])
    kind = rng.choice(kinds)
    if kind == "A1":
        m = rng.randint(1, k - 2)
        return VertexClass(vertex, "A1", m=m, n=rng.randint(m + 2, k))
    if kind == "A2":
        return VertexClass(vertex, "A2", r=rng.randint(1, k - 1))
    return VertexClass(vertex, "A3", l=rng.randint(2, k))


def random_labelled_split_graph(rng: random.Random, n_max: int = 12, k_max: int = 8, tries: int = 20):
    """A split comparability graph built from a valid labelling by construction.

    Classes are drawn one independent vertex at a time and redrawn (up to
    ``tries`` times) when they would break a pairwise property. Vertex ids are
    shuffled at the end. Returns ``(sg, lab, cls)`` with ``cls`` the
    classification of ``sg`` under ``lab``.
    """
    k = rng.randint(2, min(k_max, n_max))
    size = rng.randint(0, n_max - k)
    entries = []
    for j in range(size):
        for _ in range(tries):
            e = _random_class(rng, k + j, k)
            if not verify_properties(IClassification(k, tuple(entries) + (e,)), k):
                entries.append(e)
                break
    n = k + len(entries)
    perm = list(range(n))
    rng.shuffle(perm)
    edges = [(perm[i], perm[j]) for i in range(k) for j in range(i + 1, k)]
    for e in entries:
        edges += [(perm[label - 1], perm[e.vertex]) for label in e.labels(k)]
    g = Graph.from_edges(n, edges)
    sg = SplitGraph(g, tuple(sorted(perm[:k])), tuple(sorted(perm[k:])))
    lab = CliqueLabelling(tuple(perm[:k]))
    return sg, lab, classify(sg, lab)


def sample_graphs(n_max: int, count: int, seed: int):
    """B4 first (when it fits), then mostly random split graphs and some G(n, 1/2)."""
    rng = random.Random(seed)
    produced = 0
    if n_max >= B4.n and count:
        yield B4
        produced += 1
    while produced < count:
        n = rng.randint(1, n_max)
        if rng.random() < 0.8:
            yield random_split_graph(rng, n)
        else:
            pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
            yield Graph.from_edges(n, [p for p in pairs if rng.random() < 0.5])
        produced += 1


def _check_chunk(codes: list[str]) -> list:
    out = []
    for code in codes:
        try:
            out.append(check_graph(parse_graph6(code)))
        except SweepFailure as exc:
            out.append(exc)
    return out


def _chunks(it, size):
    it = iter(it)
    while True:
        chunk = list(islice(it, size))
        if not chunk:
            return
        yield chunk


def worker_count(workers: int | None = None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def sweep(n_max: int, mode: str = "exhaustive", seed: int = 0, count: int = 1000, workers: int | None = None) -> dict:
    """Cross-check every graph of the sweep and summarise.

    ``exhaustive`` covers every labelled graph on ``1..n_max`` vertices
    (``n_max <= 6``); ``sample`` draws ``count`` graphs with ``n <= n_max <= 10``
    from a generator seeded with ``seed``. The first failing graph, in sweep
    order, aborts the run with :class:`SweepFailure`.
    """
    if mode == "exhaustive":
        if not 1 <= n_max <= EXHAUSTIVE_MAX_N:
            raise ValueError(f"exhaustive sweeps need 1 <= n_max <= {EXHAUSTIVE_MAX_N}")
        graphs = (g for n in range(1, n_max + 1) for g in all_graphs(n))
    elif mode == "sample":
        if not 1 <= n_max <= SAMPLE_MAX_N:
            raise ValueError(f"sampled sweeps need 1 <= n_max <= {SAMPLE_MAX_N}")
        graphs = sample_graphs(n_max, count, seed)
    else:
        raise ValueError(f"unknown mode {mode!r}")

    codes = (encode_graph6(g) for g in graphs)
    workers = worker_count(workers)
    if workers == 1:
        results = map(_check_chunk, _chunks(codes, 256))
        records = (r for chunk in results for r in chunk)
        return _summarise(records, mode, n_max, seed, count)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = pool.map(_check_chunk, _chunks(codes, 256))
        records = (r for chunk in results for r in chunk)
        return _summarise(records, mode, n_max, seed, count)


def _summarise(records, mode, n_max, seed, count) -> dict:
    graphs = split = comparability = 0
    hist = Counter()
    for rec in records:
        if isinstance(rec, SweepFailure):
            raise rec
        graphs += 1
        split += rec["split"]
        comparability += rec["comparability"]
        if rec["prn"] is not None:
            hist[rec["prn"]] += 1
    summary = {
        "schema": 1,
        "mode": mode,
        "n_max": n_max,
        "graphs": graphs,
        "split": split,
        "comparability": comparability,
        "prn_histogram": {str(v): hist[v] for v in (1, 2, 3)},
        "failures": 0,
    }
    if mode == "sample":
        summary["seed"] = seed
        summary["count"] = count
    return summary
