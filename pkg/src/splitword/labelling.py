"""Clique labellings of split graphs and the A1/A2/A3 classification.

Given a labelling ``c1..ck`` of the clique, every non-isolated independent
vertex ``a`` must see the clique as one of

* ``A1``: ``[1, m] + [n, k]`` with ``m < n`` (a prefix and a disjoint suffix),
* ``A2``: ``[1, r]`` with ``r < k`` (a prefix only),
* ``A3``: ``[l, k]`` with ``l > 1`` (a suffix only),

and the pairwise conditions checked by :func:`verify_properties` must hold.
Such a labelling exists exactly when the split graph is transitively
orientable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidPartition, NotLabellable, PropertiesViolated
from .graph import bits, mask_of
from .orientation import Orientation, clique_order
from .split import SplitGraph


@dataclass(frozen=True)
class CliqueLabelling:
    order: tuple  # order[i] is the clique vertex labelled i + 1

    def __post_init__(self):
        if len(set(self.order)) != len(self.order):
            raise ValueError(f"labelling {self.order} repeats a vertex")

    @property
    def k(self) -> int:
        return len(self.order)

    def label(self, v: int) -> int:
        return self.order.index(v) + 1

    def vertex(self, label: int) -> int:
        return self.order[label - 1]

    @classmethod
    def from_orientation(cls, sg: SplitGraph, d: Orientation) -> CliqueLabelling:
        return cls(clique_order(sg, d))


@dataclass(frozen=True)
class VertexClass:
    vertex: int
    kind: str  # "A1", "A2" or "A3"
    m: int | None = None
    n: int | None = None
    r: int | None = None
    l: int | None = None

    @property
    def params(self) -> dict:
        if self.kind == "A1":
            return {"m": self.m, "n": self.n}
        if self.kind == "A2":
            return {"r": self.r}
        return {"l": self.l}

    def labels(self, k: int) -> set:
        if self.kind == "A1":
            return set(range(1, self.m + 1)) | set(range(self.n, k + 1))
        if self.kind == "A2":
            return set(range(1, self.r + 1))
        return set(range(self.l, k + 1))

    def to_dict(self) -> dict:
        return {"vertex": self.vertex, "class": self.kind, "params": self.params}


@dataclass(frozen=True)
class IClassification:
    k: int
    entries: tuple = ()
    isolated: tuple = ()

    def of_kind(self, kind: str) -> list:
        return [e for e in self.entries if e.kind == kind]

    @property
    def A1(self) -> list:
        return self.of_kind("A1")

    @property
    def A2(self) -> list:
        return self.of_kind("A2")

    @property
    def A3(self) -> list:
        return self.of_kind("A3")

    @property
    def d(self) -> int:
        return max([1] + [e.m for e in self.A1])

    def get(self, vertex: int) -> VertexClass | None:
        return next((e for e in self.entries if e.vertex == vertex), None)

    def to_list(self) -> list:
        return [e.to_dict() for e in self.entries]


@dataclass(frozen=True)
class Violation:
    prop: str
    a: int
    b: int | None
    detail: str

    def __str__(self):
        pair = f"{self.a}" if self.b is None else f"{self.a}, {self.b}"
        return f"({self.prop}) at {pair}: {self.detail}"


def _classify_labels(vertex: int, labels: list, k: int) -> VertexClass:
    s = set(labels)
    if len(s) == k:
        raise InvalidPartition(f"independent vertex {vertex} is adjacent to the whole clique")
    m = 0
    while m + 1 in s:
        m += 1
    n = k + 1
    while n - 1 in s and n - 1 >= 1:
        n -= 1
    if m and n <= k and s == set(range(1, m + 1)) | set(range(n, k + 1)):
        return VertexClass(vertex, "A1", m=m, n=n)
    if m and s == set(range(1, m + 1)):
        return VertexClass(vertex, "A2", r=m)
    if n <= k and s == set(range(n, k + 1)):
        return VertexClass(vertex, "A3", l=n)
    raise NotLabellable(vertex, labels)


def classify(sg: SplitGraph, lab: CliqueLabelling) -> IClassification:
    """Read off the class of every independent vertex under ``lab``.

    Isolated independent vertices fit none of the three forms and are listed
    separately in ``isolated``.
    """
    if sorted(lab.order) != sorted(sg.clique):
        raise ValueError(f"labelling {lab.order} is not a bijection onto the clique {sg.clique}")
    k = lab.k
    position = {c: i + 1 for i, c in enumerate(lab.order)}
    cmask = mask_of(sg.clique)
    entries, isolated = [], []
    for a in sorted(sg.independent):
        labels = sorted(position[c] for c in bits(sg.g.adj[a] & cmask))
        if not labels:
            isolated.append(a)
            continue
        entries.append(_classify_labels(a, labels, k))
    return IClassification(k, tuple(entries), tuple(isolated))


def verify_properties(cls: IClassification, k: int) -> list:
    """Every violated pairwise condition; an empty list means the labelling is valid."""
    out = []
    for e in cls.entries:
        if e.kind == "A1":
            ok = e.m is not None and e.n is not None and 1 <= e.m < e.n <= k
        elif e.kind == "A2":
            ok = e.r is not None and 1 <= e.r < k
        elif e.kind == "A3":
            ok = e.l is not None and 1 < e.l <= k
        else:
            ok = False
        if not ok:
            out.append(Violation("i", e.vertex, None, f"{e.kind} {e.params} out of range for k={k}"))
    if out:
        return out
    a1, a2, a3 = cls.A1, cls.A2, cls.A3
    for a in a2:
        for b in a3:
            if not a.r < b.l:
                out.append(Violation("ii", a.vertex, b.vertex, f"r={a.r} >= l={b.l}"))
    for a in a1:
        for b in a2:
            if not b.r < a.n:
                out.append(Violation("iii", a.vertex, b.vertex, f"r={b.r} >= n={a.n}"))
    for a in a1:
        for b in a3:
            if not a.m < b.l:
                out.append(Violation("iv", a.vertex, b.vertex, f"m={a.m} >= l={b.l}"))
    for i, a in enumerate(a1):
        for b in a1[i + 1:]:
            if not (a.m < b.n and b.m < a.n):
                out.append(Violation("v", a.vertex, b.vertex, f"m={a.m}, n={a.n} vs m={b.m}, n={b.n}"))
    return out


# phases of an independent vertex while the labelling is built left to right
_OPEN, _GAP, _TAIL = 0, 1, 2


def find_labelling(sg: SplitGraph) -> tuple[CliqueLabelling, IClassification] | None:
    """The lexicographically least valid labelling, or ``None`` if there is none.

    Clique vertices are placed one label at a time. Each independent vertex
    sees a 0/1 pattern along the labels that has to be ``1* 0+ 1*``; its
    leading run of ones is its prefix part and its trailing run its suffix
    part. All pairwise conditions amount to: no label lies in the prefix part
    of one vertex and the suffix part of another. Both constraints are checked
    as each label is placed. Clique vertices with the same independent
    neighbours are interchangeable, so only the smallest unused one of each
    such group is tried, and failed states are memoised.
    """
    g = sg.g
    k = sg.k
    cmask = mask_of(sg.clique)
    watch = [a for a in sorted(sg.independent) if g.adj[a] & cmask]
    nb = [g.adj[a] & cmask for a in watch]
    for a, row in zip(watch, nb):
        if row == cmask:
            raise InvalidPartition(f"independent vertex {a} is adjacent to the whole clique")
    profile = {c: tuple(i for i, row in enumerate(nb) if row >> c & 1) for c in sg.clique}
    failed = set()
    order = []

    def place(used: int, phases: tuple) -> bool:
        if len(order) == k:
            return True
        key = (used, phases)
        if key in failed:
            return False
        tried = set()
        for c in sg.clique:
            if used >> c & 1 or profile[c] in tried:
                continue
            tried.add(profile[c])
            rest = cmask & ~used & ~(1 << c)
            new = list(phases)
            in_prefix = in_suffix = False
            ok = True
            for i, row in enumerate(nb):
                ph = phases[i]
                if row >> c & 1:
                    if ph == _OPEN:
                        in_prefix = True
                    else:
                        if rest & ~row:
                            ok = False
                            break
                        new[i] = _TAIL
                        in_suffix = True
                elif ph == _TAIL:
                    ok = False
                    break
                elif ph == _OPEN:
                    new[i] = _GAP
            if not ok or (in_prefix and in_suffix):
                continue
            order.append(c)
            if place(used | 1 << c, tuple(new)):
                return True
            order.pop()
        failed.add(key)
        return False

    if not place(0, (_OPEN,) * len(watch)):
        return None
    lab = CliqueLabelling(tuple(order))
    cls = classify(sg, lab)
    bad = verify_properties(cls, k)
    if bad:  # pragma: no cover - the incremental checks are exact
        raise AssertionError(f"search accepted an invalid labelling: {bad}")
    return lab, cls


def orientation_from_labelling(sg: SplitGraph, lab: CliqueLabelling, cls: IClassification) -> Orientation:
    """Orient the clique along the labels, A2 vertices as sinks, A3 as sources.

    An A1 vertex with neighbourhood ``[1, m] + [n, k]`` receives arcs from
    labels ``1..m`` and sends arcs to labels ``n..k``.
    """
    bad = verify_properties(cls, lab.k)
    if bad:
        raise PropertiesViolated(bad)
    order = lab.order
    arcs = [(order[i], order[j]) for i in range(len(order)) for j in range(i + 1, len(order))]
    for e in cls.entries:
        a = e.vertex
        if e.kind == "A1":
            arcs += [(order[i - 1], a) for i in range(1, e.m + 1)]
            arcs += [(a, order[j - 1]) for j in range(e.n, lab.k + 1)]
        elif e.kind == "A2":
            arcs += [(order[i - 1], a) for i in range(1, e.r + 1)]
        else:
            arcs += [(a, order[j - 1]) for j in range(e.l, lab.k + 1)]
    return Orientation.from_arcs(sg.g.n, arcs)
