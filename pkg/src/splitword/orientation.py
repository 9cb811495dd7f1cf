"""Transitive and semi-transitive orientations of undirected graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import NotTransitive
from .graph import Graph, bits, mask_of
from .split import SplitGraph


@dataclass(frozen=True)
class Orientation:
    """A direction for every edge of an ``n``-vertex graph, stored as arcs ``(tail, head)``."""

    n: int
    arcs: frozenset

    @classmethod
    def from_arcs(cls, n, arcs) -> Orientation:
        arcs = frozenset((int(a), int(b)) for a, b in arcs)
        for a, b in arcs:
            if (b, a) in arcs:
                raise ValueError(f"edge {a}-{b} oriented both ways")
        return cls(n, arcs)

    def out_masks(self) -> list[int]:
        out = [0] * self.n
        for a, b in self.arcs:
            out[a] |= 1 << b
        return out

    def in_masks(self) -> list[int]:
        inn = [0] * self.n
        for a, b in self.arcs:
            inn[b] |= 1 << a
        return inn

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    def __contains__(self, arc) -> bool:
        return tuple(arc) in self.arcs


def _check_covers(g: Graph, d: Orientation) -> None:
    if d.n != g.n:
        raise ValueError(f"orientation is on {d.n} vertices, graph has {g.n}")
    undirected = {(min(a, b), max(a, b)) for a, b in d.arcs}
    if len(undirected) != len(d.arcs) or undirected != set(g.edges()):
        raise ValueError("orientation does not orient exactly the edges of the graph")


def verify_transitive(g: Graph, d: Orientation) -> bool:
    """True iff ``a->b`` and ``b->c`` always imply ``a->c``."""
    _check_covers(g, d)
    out = d.out_masks()
    for a, b in d.arcs:
        # everything reachable in one step from b must be reachable from a
        if out[b] & ~out[a]:
            return False
    return True


def _is_acyclic(n: int, out: list[int]) -> bool:
    indeg = [0] * n
    for v in range(n):
        for w in bits(out[v]):
            indeg[w] += 1
    ready = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while ready:
        v = ready.pop()
        seen += 1
        for w in bits(out[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return seen == n


def _reach_masks(n: int, out: list[int]) -> list[int]:
    # reflexive-transitive reachability of an acyclic orientation
    reach = [1 << v for v in range(n)]
    changed = True
    while changed:
        changed = False
        for v in range(n):
            r = reach[v]
            for w in bits(out[v]):
                r |= reach[w]
            if r != reach[v]:
                reach[v] = r
                changed = True
    return reach


def verify_semi_transitive(g: Graph, d: Orientation) -> bool:
    """True iff ``d`` is acyclic and has no shortcut.

    A shortcut is a directed path ``a1 -> ... -> ak`` whose end points are
    joined by an edge while some ``ai -> aj`` (``i < j``) is missing.
    """
    _check_covers(g, d)
    out = d.out_masks()
    if not _is_acyclic(g.n, out):
        return False
    reach = _reach_masks(g.n, out)

    for s, t in d.arcs:
        # Walk every path from s that can still reach t. ``common`` is the
        # set of vertices every path vertex so far points to; the next
        # vertex must lie in it or the path (extended to t) is a shortcut.
        seen = set()
        stack = [(s, out[s])]
        while stack:
            x, common = stack.pop()
            for y in bits(out[x]):
                if not reach[y] >> t & 1:
                    continue
                if not common >> y & 1:
                    return False
                if y == t:
                    continue
                state = (y, common & out[y])
                if state not in seen:
                    seen.add(state)
                    stack.append(state)
    return True


def enumerate_transitive_orientations(g: Graph) -> Iterator[Orientation]:
    """Every transitive orientation of ``g``, by exhaustive edge-by-edge enumeration.

    Edges are tried in ascending order, low id to high id first. A partial
    assignment is abandoned as soon as two assigned arcs compose into a pair
    that is a non-edge or is oriented backwards. No forcing is applied, so this
    serves as an independent reference for :func:`find_transitive_orientation`.
    """
    edges = g.edges()
    n = g.n
    out = [0] * n
    inn = [0] * n

    def consistent(a, b):
        for c in bits(out[b]):
            if not g.has_edge(a, c) or out[c] >> a & 1:
                return False
        for c in bits(inn[a]):
            if not g.has_edge(c, b) or out[b] >> c & 1:
                return False
        return True

    def walk(i):
        if i == len(edges):
            d = Orientation(n, frozenset((a, b) for a in range(n) for b in bits(out[a])))
            if verify_transitive(g, d):
                yield d
            return
        u, v = edges[i]
        for a, b in ((u, v), (v, u)):
            if consistent(a, b):
                out[a] |= 1 << b
                inn[b] |= 1 << a
                yield from walk(i + 1)
                out[a] &= ~(1 << b)
                inn[b] &= ~(1 << a)

    yield from walk(0)


def _force(g: Graph, out: list[int], inn: list[int], a: int, b: int) -> bool:
    stack = [(a, b)]
    while stack:
        a, b = stack.pop()
        if out[a] >> b & 1:
            continue
        if out[b] >> a & 1:
            return False
        out[a] |= 1 << b
        inn[b] |= 1 << a
        adj_a, adj_b = g.adj[a], g.adj[b]
        # c~b, c!~a: b->c would need a~c, so c->b
        for c in bits(adj_b & ~adj_a & ~(1 << a)):
            stack.append((c, b))
        # c~a, c!~b: c->a would need c~b, so a->c
        for c in bits(adj_a & ~adj_b & ~(1 << b)):
            stack.append((a, c))
        for c in bits(out[b]):
            stack.append((a, c))
        for c in bits(inn[a]):
            stack.append((c, b))
    return True


def find_transitive_orientation(g: Graph) -> Orientation | None:
    """A transitive orientation of ``g``, or ``None`` if ``g`` is not a comparability graph.

    Each unoriented edge, taken in ascending order, is oriented low to high
    first; the forced consequences are propagated and the search backtracks on
    conflict.
    """
    edges = g.edges()

    def search(out, inn):
        for u, v in edges:
            if not (out[u] >> v & 1 or out[v] >> u & 1):
                break
        else:
            return out
        for a, b in ((u, v), (v, u)):
            o, i = list(out), list(inn)
            if _force(g, o, i, a, b):
                found = search(o, i)
                if found is not None:
                    return found
        return None

    out = search([0] * g.n, [0] * g.n)
    if out is None:
        return None
    d = Orientation(g.n, frozenset((a, b) for a in range(g.n) for b in bits(out[a])))
    if not verify_transitive(g, d):  # pragma: no cover - forcing is sound
        raise AssertionError("forcing search produced a non-transitive orientation")
    return d


def clique_order(sg: SplitGraph, d: Orientation) -> tuple:
    """The clique vertices along the directed Hamiltonian path ``c1 -> ... -> ck``."""
    if not verify_transitive(sg.g, d):
        raise NotTransitive("orientation is not transitive")
    cmask = mask_of(sg.clique)
    inn = d.in_masks()
    order = tuple(sorted(sg.clique, key=lambda c: (inn[c] & cmask).bit_count()))
    for x, y in zip(order, order[1:]):
        if (x, y) not in d.arcs:
            raise NotTransitive(f"clique is not linearly ordered at {x}, {y}")
    return order
