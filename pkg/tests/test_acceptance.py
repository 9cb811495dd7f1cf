"""Acceptance criteria 1-7. Each test prints one PASS/FAIL line with its measured runtime."""

import random
import time

import pytest

from splitword.errors import NotSplit
from splitword.graph import is_induced_embedding
from splitword.labelling import find_labelling
from splitword.orientation import enumerate_transitive_orientations, find_transitive_orientation
from splitword.poset import dimension, poset_from_orientation, prn, prn_oracle
from splitword.split import B4, NON_COMPARABILITY, SplitGraph, find_forbidden, split_partition
from splitword.sweep import all_graphs, random_labelled_split_graph
from splitword.words import alternates, build_word, compact, compact_names, is_permutation, represents, restrict, uniformity


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail, elapsed=None, limit=None):
        timing = "" if elapsed is None else f" [{elapsed:.2f}s, limit {limit}s]"
        with capsys.disabled():
            print(f"\nACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} {detail}{timing}")
    return emit


def _split_graphs(n_max):
    for n in range(1, n_max + 1):
        for g in all_graphs(n):
            try:
                yield split_partition(g)
            except NotSplit:
                continue


def test_criterion_1_prn_b4(report):
    start = time.perf_counter()
    r = prn(B4)
    z = tuple(r.certificate_data["z"])
    ok = (
        r.value == 3
        and is_induced_embedding(B4, B4, r.certificate_data["embedding"])
        and len(r.certificate_data["blocks"]) == 3
        and represents(z, B4)
        and uniformity(z) == 3
        and r.verify(B4)
    )
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 1
    report(1, ok, f"prn(B4)={r.value}, certificate verified", elapsed, 1)
    assert ok


def test_criterion_2_three_permutation_words(report):
    start = time.perf_counter()
    count = failures = 0
    for sg in _split_graphs(6):
        found = find_labelling(sg)
        if found is None:
            continue
        count += 1
        blocks = build_word(sg, *found)
        if not (all(is_permutation(q, sg.g.n) for q in blocks) and represents(blocks.z, sg.g)):
            failures += 1
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 300
    report(2, ok, f"{count} split comparability graphs (n<=6), {failures} failures", elapsed, 300)
    assert ok


def test_criterion_3_characterisation(report):
    count = discrepancies = 0
    for sg in _split_graphs(6):
        count += 1
        verdicts = {
            find_labelling(sg) is not None,
            next(enumerate_transitive_orientations(sg.g), None) is not None,
            find_forbidden(sg.g, NON_COMPARABILITY) is None,
        }
        discrepancies += len(verdicts) != 1
    ok = discrepancies == 0
    report(3, ok, f"{count} split graphs (n<=6), {discrepancies} discrepancies")
    assert ok


def test_criterion_4_dimension_bridge(report):
    start = time.perf_counter()
    count = discrepancies = oracle_checked = 0
    for sg in _split_graphs(6):
        d = find_transitive_orientation(sg.g)
        if d is None:
            continue
        count += 1
        value = prn(sg.g).value
        dim = dimension(poset_from_orientation(d), cap=4)
        if dim != value or dim > 3:
            discrepancies += 1
        if sg.g.n <= 5:
            oracle_checked += 1
            if min(k for k in (1, 2, 3, 4) if prn_oracle(sg.g, k)) != value:
                discrepancies += 1
    elapsed = time.perf_counter() - start
    ok = discrepancies == 0 and elapsed < 600
    report(4, ok, f"{count} graphs vs dimension, {oracle_checked} vs oracle, {discrepancies} discrepancies",
           elapsed, 600)
    assert ok


def test_criterion_5_b4_trace(report):
    sg = SplitGraph(B4, (0, 1, 2, 3), (4, 5, 6))
    lab, cls = find_labelling(sg)
    names = compact_names(sg, lab)
    got = [compact(q, names) for q in build_word(sg, lab, cls)]
    ok = lab.order == (2, 1, 0, 3) and got == ["7152346", "1267354", "1527346"]
    report(5, ok, "q1 q2 q3 = " + " ".join(got))
    assert ok


def test_criterion_6_word_semantics(report):
    w = "acabbccb"
    ok = restrict(w, {"a", "b"}) == "aabbb" and alternates(w, "a", "b") is False
    report(6, ok, f"restrict -> {restrict(w, {'a', 'b'})}, alternates -> {alternates(w, 'a', 'b')}")
    assert ok


def test_criterion_7_clique_restriction(report):
    rng = random.Random(2024)
    failures = 0
    for _ in range(1000):
        sg, lab, cls = random_labelled_split_graph(rng, n_max=12, k_max=8)
        # the constructing labelling, and the one the pipeline finds on its own
        z = build_word(sg, lab, cls).z
        failures += restrict(z, lab.order) != lab.order * 3
        own = split_partition(sg.g)
        own_lab, own_cls = find_labelling(own)
        z = build_word(own, own_lab, own_cls).z
        failures += restrict(z, own_lab.order) != own_lab.order * 3 or not represents(z, sg.g)
    ok = failures == 0
    report(7, ok, f"1000 constructed graphs (n<=12, k<=8), {failures} failures")
    assert ok
