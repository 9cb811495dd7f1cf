import random

import pytest
from hypothesis import given, strategies as st

from splitword.errors import MissingVertex, NotComparability, PropertiesViolated
from splitword.graph import Graph
from splitword.labelling import CliqueLabelling, IClassification, VertexClass, classify, find_labelling
from splitword.split import B1, B4, SplitGraph, split_partition
from splitword.sweep import random_labelled_split_graph
from splitword.words import (
    alternates,
    build_and_verify,
    build_word,
    compact,
    compact_names,
    is_permutation,
    pair_report,
    represents,
    restrict,
    uniformity,
)

W = "acabbccb"
B4_SPLIT = SplitGraph(B4, (0, 1, 2, 3), (4, 5, 6))
B4_LAB = CliqueLabelling((2, 1, 0, 3))

words = st.lists(st.sampled_from("abcde"), max_size=14).map("".join)


def test_restrict_examples():
    assert restrict(W, {"a", "b"}) == "aabbb"
    assert restrict(W, set()) == ""
    assert restrict(W, {"a", "b", "c"}) == W
    assert restrict((1, 2, 1), {1}) == (1, 1)


def test_alternates_examples():
    assert not alternates(W, "a", "b")
    assert alternates("abab", "a", "b")
    assert not alternates("ab" + "ba", "a", "b")
    assert alternates("xay", "a", "b")
    assert alternates("ab", "a", "b")
    with pytest.raises(ValueError):
        alternates("aa", "a", "a")


def test_represents_examples():
    assert represents((0, 1, 2) * 3, Graph.complete(3))
    assert not represents((0, 0, 1, 1), Graph.complete(2))
    with pytest.raises(MissingVertex) as info:
        represents((0, 1), Graph.empty(3))
    assert info.value.missing == [2]


def test_uniformity_examples():
    assert uniformity("123123123") == 3
    assert uniformity("aabbb") is None
    assert uniformity("a") == 1
    assert uniformity("") is None


@given(words, st.sampled_from("abcde"), st.sampled_from("abcde"))
def test_alternates_symmetric(w, x, y):
    if x != y:
        assert alternates(w, x, y) == alternates(w, y, x)


@given(words, st.sets(st.sampled_from("abcde")), st.sets(st.sampled_from("abcde")))
def test_restrict_composes(w, a, b):
    assert restrict(w, a & b) == restrict(restrict(w, a), b)


def test_b4_golden_trace():
    cls = classify(B4_SPLIT, B4_LAB)
    blocks = build_word(B4_SPLIT, B4_LAB, cls)
    names = compact_names(B4_SPLIT, B4_LAB)
    assert [compact(q, names) for q in blocks] == ["7152346", "1267354", "1527346"]
    assert blocks.z == (6, 2, 4, 1, 0, 3, 5, 2, 1, 5, 6, 0, 4, 3, 2, 4, 1, 6, 0, 3, 5)
    assert represents(blocks.z, B4) and uniformity(blocks.z) == 3


def test_k3_and_k1():
    sg = split_partition(Graph.complete(3))
    lab, cls = find_labelling(sg)
    assert build_word(sg, lab, cls).z == (0, 1, 2) * 3
    z, report = build_and_verify(split_partition(Graph.complete(1)))
    assert z == (0, 0, 0) and report["all_pass"]


def test_build_and_verify_reports():
    z, report = build_and_verify(B4_SPLIT)
    assert report["all_pass"] and report["uniformity"] == 3
    assert report["labelling"] == [2, 1, 0, 3]
    with pytest.raises(NotComparability) as info:
        build_and_verify(split_partition(B1))
    assert info.value.name == "B1"


def test_build_word_rejects_violations():
    cls = IClassification(4, (VertexClass(5, "A2", r=3), VertexClass(6, "A3", l=2)))
    with pytest.raises(PropertiesViolated):
        build_word(B4_SPLIT, B4_LAB, cls)
    with pytest.raises(ValueError):
        build_word(B4_SPLIT, B4_LAB, classify(B4_SPLIT, B4_LAB), order=[4, 5])


def test_isolated_vertices_placement():
    sg = split_partition(Graph.empty(3))
    lab, cls = find_labelling(sg)
    assert [list(q) for q in build_word(sg, lab, cls)] == [[0, 1, 2], [2, 1, 0], [0, 1, 2]]


def test_three_permutation_words_exhaustive(labelled_6):
    for sg, lab, cls in labelled_6:
        blocks = build_word(sg, lab, cls)
        z = blocks.z
        assert all(is_permutation(q, sg.g.n) for q in blocks)
        assert uniformity(z) == 3
        assert represents(z, sg.g)
        assert all(pair_report(z, sg).values())
        assert restrict(z, lab.order) == lab.order * 3


def test_processing_order_robustness():
    rng = random.Random(11)
    graphs = [B4_SPLIT] + [random_labelled_split_graph(rng, 9, 6)[0] for _ in range(5)]
    for sg in graphs:
        lab, cls = find_labelling(sg)
        vertices = [e.vertex for e in cls.entries]
        for _ in range(200):
            rng.shuffle(vertices)
            blocks = build_word(sg, lab, cls, order=list(vertices))
            assert represents(blocks.z, sg.g)
            assert restrict(blocks.z, lab.order) == lab.order * 3


def test_compact_names_limit():
    sg = split_partition(Graph.complete(10))
    lab, _ = find_labelling(sg)
    assert compact_names(sg, lab) is None
