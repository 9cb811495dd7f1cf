"""Words over vertex ids and the three-permutation construction for split comparability graphs."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import MissingVertex, NotComparability, PropertiesViolated
from .graph import Graph
from .labelling import CliqueLabelling, IClassification, find_labelling, verify_properties
from .split import NON_COMPARABILITY, SplitGraph, find_forbidden


def restrict(w, letters: Iterable):
    """The subsequence of ``w`` made of the given letters. Strings stay strings."""
    keep = set(letters)
    if isinstance(w, str):
        return "".join(c for c in w if c in keep)
    return tuple(c for c in w if c in keep)


def alternates(w, x, y) -> bool:
    if x == y:
        raise ValueError("alternation needs two distinct letters")
    r = restrict(w, (x, y))
    return all(p != q for p, q in zip(r, r[1:]))


def represents(w, g: Graph) -> bool:
    """True iff adjacency in ``g`` coincides with alternation in ``w`` for every pair."""
    present = set(w)
    missing = set(range(g.n)) - present
    if missing:
        raise MissingVertex(missing)
    positions = {v: [] for v in range(g.n)}
    for i, c in enumerate(w):
        if c in positions:
            positions[c].append(i)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if _interleaved(positions[u], positions[v]) != g.has_edge(u, v):
                return False
    return True


def _interleaved(p: list, q: list) -> bool:
    merged = sorted([(i, 0) for i in p] + [(i, 1) for i in q])
    return all(a[1] != b[1] for a, b in zip(merged, merged[1:]))


def uniformity(w) -> int | None:
    counts = set(Counter(w).values())
    if len(counts) == 1:
        return counts.pop()
    return None


def is_permutation(block: Sequence, n: int) -> bool:
    return len(block) == n and sorted(block) == list(range(n))


@dataclass(frozen=True)
class WordBlocks:
    q1: tuple
    q2: tuple
    q3: tuple

    @property
    def z(self) -> tuple:
        return self.q1 + self.q2 + self.q3

    def __iter__(self):
        return iter((self.q1, self.q2, self.q3))


def _insert_after(q: list, anchor, x) -> None:
    q.insert(q.index(anchor) + 1, x)


def _insert_before(q: list, anchor, x) -> None:
    q.insert(q.index(anchor), x)


def build_word(sg: SplitGraph, lab: CliqueLabelling, cls: IClassification, order=None) -> WordBlocks:
    """Three permutations of the vertices whose concatenation represents ``sg.g``.

    All three blocks start as the clique in label order. Independent vertices
    are processed in ascending id order unless ``order`` gives another one:

    * A1 ``(m, n)``: after label ``m`` in q1, before label ``n`` in q2, and ``d``
      is raised to ``m``;
    * A2 ``(r)``: after label ``r`` in q2 and at the end of q3;
    * A3 ``(l)``: before label ``l`` in q2 and in q3.

    Then q1 is wrapped as ``rev(q2|A3) q1 rev(q2|A2)`` and ``rev(q1|A1)`` is placed
    right after label ``d`` in q3. Isolated independent vertices, which have no
    class, go to the end of q1, reversed to the front of q2 and to the end of q3.
    """
    bad = verify_properties(cls, lab.k)
    if bad:
        raise PropertiesViolated(bad)
    at = lab.vertex
    q1, q2, q3 = list(lab.order), list(lab.order), list(lab.order)
    d = 1
    entries = {e.vertex: e for e in cls.entries}
    if order is None:
        order = sorted(entries)
    elif sorted(order) != sorted(entries):
        raise ValueError("processing order must list each classified vertex once")
    for a in order:
        e = entries[a]
        if e.kind == "A1":
            d = max(d, e.m)
            _insert_after(q1, at(e.m), a)
            _insert_before(q2, at(e.n), a)
        elif e.kind == "A2":
            _insert_after(q2, at(e.r), a)
            q3.append(a)
        else:
            _insert_before(q2, at(e.l), a)
            _insert_before(q3, at(e.l), a)
    a1 = {e.vertex for e in cls.A1}
    a2 = {e.vertex for e in cls.A2}
    a3 = {e.vertex for e in cls.A3}
    q1 = list(restrict(q2, a3))[::-1] + q1 + list(restrict(q2, a2))[::-1]
    if lab.k:
        i = q3.index(at(d)) + 1
        q3[i:i] = list(restrict(q1, a1))[::-1]
    isolated = sorted(cls.isolated)
    q1 += isolated
    q2 = isolated[::-1] + q2
    q3 += isolated
    return WordBlocks(tuple(q1), tuple(q2), tuple(q3))


def pair_report(z: Sequence, sg: SplitGraph) -> dict:
    """Check the three families of vertex pairs separately.

    Returns booleans for: adjacent pairs alternate, independent pairs do not
    alternate, and non-adjacent independent/clique pairs do not alternate.
    """
    g = sg.g
    positions = {v: [] for v in range(g.n)}
    for i, c in enumerate(z):
        positions[c].append(i)
    alt = lambda u, v: _interleaved(positions[u], positions[v])  # noqa: E731
    adjacent = all(alt(u, v) for u, v in g.edges())
    ind = sg.independent
    independent = not any(alt(a, b) for i, a in enumerate(ind) for b in ind[i + 1:])
    cross = not any(alt(a, c) for a in ind for c in sg.clique if not g.has_edge(a, c))
    return {
        "adjacent_alternate": adjacent,
        "independent_pairs_do_not_alternate": independent,
        "nonadjacent_cross_pairs_do_not_alternate": cross,
    }


def verify_blocks(blocks: WordBlocks, sg: SplitGraph, lab: CliqueLabelling) -> dict:
    n = sg.g.n
    z = blocks.z
    report = {
        "uniformity": uniformity(z) if n else 3,
        "blocks_are_permutations": all(is_permutation(q, n) for q in blocks),
        "represents": represents(z, sg.g),
        "clique_restriction": restrict(z, lab.order) == tuple(lab.order) * 3,
    }
    report.update(pair_report(z, sg))
    report["all_pass"] = all(v is True for k, v in report.items() if k != "uniformity") and report["uniformity"] == 3
    return report


def build_and_verify(sg: SplitGraph) -> tuple[tuple, dict]:
    """Find a labelling, build the word and check it. Returns ``(z, report)``."""
    found = find_labelling(sg)
    if found is None:
        cert = find_forbidden(sg.g, NON_COMPARABILITY)
        if cert is None:  # pragma: no cover - would contradict the forbidden-subgraph characterisation
            raise AssertionError("no labelling but no forbidden subgraph either")
        raise NotComparability(*cert)
    lab, cls = found
    blocks = build_word(sg, lab, cls)
    report = verify_blocks(blocks, sg, lab)
    report["labelling"] = list(lab.order)
    report["blocks"] = [list(q) for q in blocks]
    return blocks.z, report


def compact_names(sg: SplitGraph, lab: CliqueLabelling) -> dict | None:
    """Clique vertices by label, then independent vertices numbered ``k+1, k+2, ...``.

    Returns ``None`` when some name would need more than one digit.
    """
    if sg.g.n > 9:
        return None
    names = {c: i + 1 for i, c in enumerate(lab.order)}
    for j, a in enumerate(sorted(sg.independent)):
        names[a] = lab.k + 1 + j
    return names


def compact(word: Sequence, names: dict) -> str:
    return "".join(str(names[v]) for v in word)
