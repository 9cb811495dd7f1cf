"""Split-graph recognition and the four forbidden split graphs B1..B4."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .errors import InvalidPartition, NotSplit
from .graph import Embedding, Graph, bits, find_induced, mask_of, parse_edge_list


@dataclass(frozen=True)
class SplitGraph:
    g: Graph
    clique: tuple
    independent: tuple

    @property
    def k(self) -> int:
        return len(self.clique)

    def is_maximal(self) -> bool:
        cmask = mask_of(self.clique)
        return not any(self.g.adj[a] & cmask == cmask for a in self.independent)

    def validate(self, require_maximal: bool = True) -> None:
        if sorted(self.clique + self.independent) != list(range(self.g.n)):
            raise InvalidPartition("clique and independent set must partition the vertices")
        if not self.g.is_clique(self.clique):
            raise InvalidPartition(f"{self.clique} is not a clique")
        if not self.g.is_independent(self.independent):
            raise InvalidPartition(f"{self.independent} is not independent")
        if require_maximal and not self.is_maximal():
            raise InvalidPartition("clique is not inclusion-wise maximal")


def _certificate(g: Graph) -> tuple[str, Embedding] | None:
    for name, pattern in OBSTRUCTIONS.items():
        emb = find_induced(g, pattern)
        if emb is not None:
            return name, emb
    return None


def split_partition(g: Graph) -> SplitGraph:
    """Partition ``g`` into a maximal clique and an independent set.

    Uses the degree-sequence threshold test. Among all valid partitions with a
    maximal clique, the one whose sorted clique is lexicographically least is
    returned.
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    m = 0
    for i, d in enumerate(degs, start=1):
        if d >= i - 1:
            m = i
    if sum(degs[:m]) != m * (m - 1) + sum(degs[m:]):
        cert = _certificate(g)
        if cert is None:  # pragma: no cover - contradicts the degree test
            raise AssertionError("degree test rejected a graph with no split obstruction")
        raise NotSplit(*cert)
    clique = tuple(sorted(order[:m]))
    indep = tuple(sorted(order[m:]))
    sg = SplitGraph(g, clique, indep)
    sg.validate(require_maximal=False)
    sg = normalize_maximal(sg)
    return _least_partition(sg)


def _least_partition(sg: SplitGraph) -> SplitGraph:
    # Every other maximal partition clique is C - c + a where N(a) = C - c.
    g = sg.g
    cmask = mask_of(sg.clique)
    best = sg
    for a in sg.independent:
        missing = cmask & ~g.adj[a]
        if missing.bit_count() != 1:
            continue
        c = missing.bit_length() - 1
        rest = mask_of(sg.independent) & ~(1 << a)
        if g.adj[c] & rest:
            continue
        clique = tuple(sorted(set(sg.clique) - {c} | {a}))
        if clique < best.clique:
            indep = tuple(sorted(set(sg.independent) - {a} | {c}))
            best = SplitGraph(g, clique, indep)
    return best


def normalize_maximal(sg: SplitGraph) -> SplitGraph:
    """Move independent vertices adjacent to the whole clique into it, smallest id first."""
    sg.validate(require_maximal=False)
    g = sg.g
    clique = set(sg.clique)
    indep = sorted(sg.independent)
    while True:
        cmask = mask_of(clique)
        mover = next((a for a in indep if g.adj[a] & cmask == cmask), None)
        if mover is None:
            break
        clique.add(mover)
        indep.remove(mover)
        if not g.is_independent(indep):  # pragma: no cover - defensive
            raise InvalidPartition(f"independent set broken after moving {mover}")
    return SplitGraph(g, tuple(sorted(clique)), tuple(indep))


# -- forbidden configurations ----------------------------------------------

OBSTRUCTIONS = {
    "2K2": Graph.from_edges(4, [(0, 1), (2, 3)]),
    "C4": Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
    "C5": Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
}


def _load(name: str) -> Graph:
    text = resources.files(__package__).joinpath("data", f"{name}.txt").read_text()
    return parse_edge_list(text)


# net: triangle 0,1,2 with pendants 3-0, 4-1, 5-2
B1 = _load("B1")
# 3-sun: triangle 0,1,2; 3~{0,1}, 4~{1,2}, 5~{0,2}
B2 = _load("B2")
# triangle 0,1,2; pendants 3-0, 4-1; 5~{0,2}, 6~{1,2}
B3 = _load("B3")
# K4 on 0..3; 4~{2,3}, 5~{1,2}, 6~{0,3}
B4 = _load("B4")

FAMILY = {"B1": B1, "B2": B2, "B3": B3, "B4": B4}
NON_COMPARABILITY = ("B1", "B2", "B3")


def find_forbidden(g: Graph, which=tuple(FAMILY)) -> tuple[str, Embedding] | None:
    """First family member, in the order B1, B2, B3, B4, found as an induced subgraph."""
    wanted = set(which)
    unknown = wanted - set(FAMILY)
    if unknown:
        raise ValueError(f"unknown family members: {sorted(unknown)}")
    for name, pattern in FAMILY.items():
        if name in wanted:
            emb = find_induced(g, pattern)
            if emb is not None:
                return name, emb
    return None


def clique_neighbourhood(sg: SplitGraph, a: int) -> list[int]:
    return [c for c in bits(sg.g.adj[a] & mask_of(sg.clique))]
