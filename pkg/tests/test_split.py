from importlib import resources

import pytest

from splitword.errors import InvalidPartition, NotSplit
from splitword.graph import Graph, find_induced, is_induced_embedding, parse_edge_list
from splitword.orientation import enumerate_transitive_orientations
from splitword.split import (
    B1,
    B4,
    FAMILY,
    NON_COMPARABILITY,
    OBSTRUCTIONS,
    SplitGraph,
    find_forbidden,
    normalize_maximal,
    split_partition,
)
from splitword.sweep import all_graphs

from conftest import B4_DOC, cycle


def test_split_examples():
    sg = split_partition(Graph.complete(3))
    assert (sg.clique, sg.independent) == ((0, 1, 2), ())
    sg = split_partition(B4)
    assert (sg.clique, sg.independent) == ((0, 1, 2, 3), (4, 5, 6))
    with pytest.raises(NotSplit) as info:
        split_partition(cycle(4))
    assert info.value.kind == "C4"
    assert is_induced_embedding(cycle(4), OBSTRUCTIONS["C4"], info.value.embedding)


def test_split_edge_cases():
    assert split_partition(Graph.empty(0)).clique == ()
    sg = split_partition(Graph.empty(3))
    assert (sg.clique, sg.independent) == ((0,), (1, 2))
    with pytest.raises(NotSplit) as info:
        split_partition(cycle(5))
    assert info.value.kind == "C5"


def test_split_recognition_exhaustive():
    for n in range(1, 7):
        for g in all_graphs(n):
            hit = next((name for name, p in OBSTRUCTIONS.items() if find_induced(g, p) is not None), None)
            try:
                sg = split_partition(g)
            except NotSplit as exc:
                assert hit is not None
                assert is_induced_embedding(g, OBSTRUCTIONS[exc.kind], exc.embedding)
                continue
            assert hit is None
            sg.validate()
            assert normalize_maximal(sg) == sg


def test_least_clique_among_alternatives():
    # a pendant edge: both {0,1} and {1,2} are maximal cliques; the least wins
    sg = split_partition(Graph.from_edges(3, [(0, 1), (1, 2)]))
    assert sg.clique == (0, 1)


def test_normalize_examples():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    sg = normalize_maximal(SplitGraph(star, (0,), (1, 2, 3)))
    assert (sg.clique, sg.independent) == ((0, 1), (2, 3))
    sg.validate()
    sg = normalize_maximal(SplitGraph(Graph.complete(3), (0, 1), (2,)))
    assert (sg.clique, sg.independent) == ((0, 1, 2), ())
    b4 = SplitGraph(B4, (0, 1, 2, 3), (4, 5, 6))
    assert normalize_maximal(b4) == b4


def test_normalize_rejects_bad_input():
    with pytest.raises(InvalidPartition):
        normalize_maximal(SplitGraph(Graph.empty(2), (0, 1), ()))
    with pytest.raises(InvalidPartition):
        normalize_maximal(SplitGraph(Graph.complete(2), (0,), ()))


@pytest.mark.parametrize("name, n, m", [("B1", 6, 6), ("B2", 6, 9), ("B3", 7, 9), ("B4", 7, 12)])
def test_family_sizes_and_split(name, n, m):
    g = FAMILY[name]
    assert (g.n, g.m) == (n, m)
    split_partition(g).validate()


def test_family_data_files():
    root = resources.files("splitword") / "data"
    for name, g in FAMILY.items():
        assert parse_edge_list((root / f"{name}.txt").read_text()) == g
    assert FAMILY["B4"] == parse_edge_list(B4_DOC)


def test_family_comparability_status():
    for name in NON_COMPARABILITY:
        assert next(enumerate_transitive_orientations(FAMILY[name]), None) is None
    assert next(enumerate_transitive_orientations(B4), None) is not None


def test_family_members_avoid_each_other():
    # each member contains no other member, so the certificates are minimal
    for a, ga in FAMILY.items():
        for b, gb in FAMILY.items():
            if a != b:
                assert find_induced(ga, gb) is None


def test_find_forbidden_examples():
    assert find_forbidden(B4, NON_COMPARABILITY) is None
    assert find_forbidden(B4, ("B4",)) == ("B4", {i: i for i in range(7)})
    assert find_forbidden(B1, NON_COMPARABILITY) == ("B1", {i: i for i in range(6)})


def test_forbidden_characterisation(split_graphs_6):
    for sg in split_graphs_6:
        free = find_forbidden(sg.g, NON_COMPARABILITY) is None
        assert free == (next(enumerate_transitive_orientations(sg.g), None) is not None)


@pytest.mark.slow
def test_forbidden_characterisation_n7():
    from splitword.sweep import random_split_graph
    import random

    rng = random.Random(7)
    for _ in range(400):
        g = random_split_graph(rng, 7)
        free = find_forbidden(g, NON_COMPARABILITY) is None
        assert free == (next(enumerate_transitive_orientations(g), None) is not None)
