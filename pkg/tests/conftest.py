import pytest

from splitword.errors import NotSplit
from splitword.graph import Graph
from splitword.labelling import find_labelling
from splitword.split import split_partition
from splitword.sweep import all_graphs

B4_DOC = "n=7; 0-1,0-2,0-3,0-6,1-2,1-3,1-5,2-3,2-4,2-5,3-4,3-6"
B1_DOC = "n=6; 0-1,0-2,1-2,0-3,1-4,2-5"


def path3() -> Graph:
    return Graph.from_edges(3, [(0, 1), (1, 2)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


@pytest.fixture(scope="session")
def split_graphs_6():
    """Every labelled split graph on 1..6 vertices, as SplitGraph."""
    out = []
    for n in range(1, 7):
        for g in all_graphs(n):
            try:
                out.append(split_partition(g))
            except NotSplit:
                pass
    return out


@pytest.fixture(scope="session")
def labelled_6(split_graphs_6):
    """(sg, lab, cls) for every split comparability graph on at most 6 vertices."""
    out = []
    for sg in split_graphs_6:
        found = find_labelling(sg)
        if found is not None:
            out.append((sg,) + found)
    return out
