"""Permutation-representation number with certificates, and a brute-force poset dimension.

The two routes are kept independent: :func:`prn` works from the forbidden
subgraph B4, transitive orientations and the word construction, while
:func:`dimension` enumerates linear extensions and :func:`prn_oracle` searches
words directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import CapExceeded, NotComparability, NotTransitive, TooLarge
from .graph import Graph, complement, is_induced_embedding
from .orientation import Orientation, find_transitive_orientation
from .split import B4, NON_COMPARABILITY, find_forbidden, split_partition
from .words import build_and_verify, is_permutation, represents, uniformity

DIMENSION_MAX_ELEMENTS = 9
ORACLE_MAX_VERTICES = 5


@dataclass(frozen=True)
class Poset:
    n: int
    lt: frozenset

    def __post_init__(self):
        for a, b in self.lt:
            if a == b:
                raise ValueError(f"relation is not irreflexive at {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ValueError(f"pair {(a, b)} out of range")
        below = self.up_masks()
        for a, b in self.lt:
            if below[b] & ~below[a]:
                raise ValueError(f"relation is not transitive above {a} < {b}")

    def up_masks(self) -> list[int]:
        up = [0] * self.n
        for a, b in self.lt:
            up[a] |= 1 << b
        return up

    def comparable(self, a: int, b: int) -> bool:
        return (a, b) in self.lt or (b, a) in self.lt

    def incomparable_pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in range(a + 1, self.n) if not self.comparable(a, b)]


def poset_from_orientation(d: Orientation) -> Poset:
    try:
        return Poset(d.n, frozenset(d.arcs))
    except ValueError as exc:
        raise NotTransitive(str(exc)) from exc


def linear_extensions(p: Poset):
    """All linear extensions in lexicographic order."""
    down = [0] * p.n
    for a, b in p.lt:
        down[b] |= 1 << a
    prefix = []

    def walk(placed):
        if len(prefix) == p.n:
            yield tuple(prefix)
            return
        for v in range(p.n):
            if not placed >> v & 1 and down[v] & ~placed == 0:
                prefix.append(v)
                yield from walk(placed | 1 << v)
                prefix.pop()

    yield from walk(0)


def realizer(p: Poset, cap: int = 3) -> list[tuple]:
    """A smallest set of linear extensions whose intersection is ``p``.

    Every extension is encoded by which way round it puts each incomparable
    pair; ``t`` extensions realize ``p`` iff every pair is seen both ways.
    Sizes ``t = 1, 2, ...`` are tried in turn and the first solution in
    enumeration order is returned.
    """
    if p.n > DIMENSION_MAX_ELEMENTS:
        raise TooLarge(f"dimension search limited to {DIMENSION_MAX_ELEMENTS} elements, got {p.n}")
    exts = list(linear_extensions(p))
    pairs = p.incomparable_pairs()
    if not pairs:
        if cap < 1:
            raise CapExceeded("dimension 1 exceeds cap")
        return [exts[0]]
    full = (1 << len(pairs)) - 1
    masks = []
    for e in exts:
        pos = {v: i for i, v in enumerate(e)}
        masks.append(sum(1 << j for j, (a, b) in enumerate(pairs) if pos[a] < pos[b]))
    index = {}
    for i, m in enumerate(masks):
        index.setdefault(m, i)
    for i, m in enumerate(masks):
        j = index.get(full ^ m)
        if j is not None:
            if cap < 2:
                raise CapExceeded("dimension 2 exceeds cap")
            return [exts[i], exts[j]]
    # each pair needs an extension ordering it "forwards"; without loss of
    # generality the first chosen extension does so for pair 0
    for t in range(3, cap + 1):
        firsts = [i for i, m in enumerate(masks) if m & 1]
        for first in firsts:
            for rest in itertools.combinations(range(len(masks)), t - 1):
                if first in rest:
                    continue
                chosen = (first,) + rest
                ors = ands = masks[first]
                for i in rest:
                    ors |= masks[i]
                    ands &= masks[i]
                if ors == full and ands == 0:
                    return [exts[i] for i in chosen]
    raise CapExceeded(f"dimension exceeds cap {cap}")


def dimension(p: Poset, cap: int = 3) -> int:
    return len(realizer(p, cap))


# -- permutation-representation number --------------------------------------

@dataclass(frozen=True)
class PrnResult:
    value: int
    certificate_kind: str  # "complete", "two_permutation_word" or "b4_embedding"
    certificate_data: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "certificate_kind": self.certificate_kind,
            "certificate_data": self.certificate_data,
        }

    def verify(self, g: Graph) -> bool:
        """Re-check the certificate against ``g`` from scratch."""
        data = self.certificate_data
        if self.value == 1:
            return self.certificate_kind == "complete" and g.is_complete()
        if self.value == 2:
            blocks = [tuple(data["q1"]), tuple(data["q2"])]
            return (
                self.certificate_kind == "two_permutation_word"
                and all(is_permutation(q, g.n) for q in blocks)
                and represents(blocks[0] + blocks[1], g)
            )
        if self.value == 3:
            emb = {int(k): v for k, v in data["embedding"].items()}
            blocks = [tuple(q) for q in data["blocks"]]
            z = sum(blocks, ())
            return (
                self.certificate_kind == "b4_embedding"
                and is_induced_embedding(g, B4, emb)
                and len(blocks) == 3
                and all(is_permutation(q, g.n) for q in blocks)
                and uniformity(z) == 3
                and represents(z, g)
            )
        return False


def _linear_order(n: int, arcs) -> tuple:
    indeg = [0] * n
    for _, b in arcs:
        indeg[b] += 1
    order = tuple(sorted(range(n), key=lambda v: indeg[v]))
    if sorted(indeg) != list(range(n)):
        raise AssertionError("arcs do not form a transitive tournament")
    return order


def two_dimensional_realizer(g: Graph) -> tuple[tuple, tuple] | None:
    """Two linear orders whose common pairs are exactly the edges of ``g``.

    Built from a transitive orientation ``T`` of ``g`` and ``F`` of its
    complement: ``T + F`` and ``T + reversed F`` are both linear orders.
    """
    t = find_transitive_orientation(g)
    f = find_transitive_orientation(complement(g))
    if t is None or f is None:
        return None
    l1 = _linear_order(g.n, t.arcs | f.arcs)
    l2 = _linear_order(g.n, t.arcs | {(b, a) for a, b in f.arcs})
    return l1, l2


def prn(g: Graph) -> PrnResult:
    """Permutation-representation number of a split comparability graph, with a certificate."""
    sg = split_partition(g)
    cert = find_forbidden(g, NON_COMPARABILITY)
    if cert is not None:
        raise NotComparability(*cert)
    if g.is_complete():
        return PrnResult(1, "complete", {})
    hit = find_forbidden(g, ("B4",))
    if hit is None:
        pair = two_dimensional_realizer(g)
        if pair is None:  # pragma: no cover - B4-free split comparability graphs are permutation graphs
            raise AssertionError("B4-free split comparability graph without a two-dimensional realizer")
        q1, q2 = pair
        if not represents(q1 + q2, g):  # pragma: no cover
            raise AssertionError("two-permutation word does not represent the graph")
        return PrnResult(2, "two_permutation_word", {"q1": list(q1), "q2": list(q2)})
    _, emb = hit
    z, report = build_and_verify(sg)
    if not report["all_pass"]:  # pragma: no cover
        raise AssertionError(f"word construction failed its own checks: {report}")
    return PrnResult(3, "b4_embedding", {"embedding": emb, "z": list(z), "blocks": report["blocks"]})


def prn_oracle(g: Graph, k: int) -> bool:
    """Does some concatenation of ``k`` permutations of the vertices represent ``g``?

    Exhaustive over permutations. Two letters of a word made of permutations
    alternate iff every block orders them the same way, so blocks after the
    first are drawn only from permutations agreeing with it on every edge;
    each candidate word is then checked with :func:`represents`.
    """
    if g.n > ORACLE_MAX_VERTICES:
        raise TooLarge(f"prn oracle limited to {ORACLE_MAX_VERTICES} vertices, got {g.n}")
    if k < 1:
        return False
    edges = g.edges()
    by_signature = {}
    for q in itertools.permutations(range(g.n)):
        pos = {v: i for i, v in enumerate(q)}
        sig = sum(1 << j for j, (u, v) in enumerate(edges) if pos[u] < pos[v])
        by_signature.setdefault(sig, []).append(q)
    for agree in by_signature.values():
        for p1 in agree:
            for rest in itertools.product(agree, repeat=k - 1):
                if represents(p1 + sum(rest, ()), g):
                    return True
    return False

