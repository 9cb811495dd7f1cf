"""Undirected simple graphs over dense integer ids, with text formats.

Adjacency is held as one Python int bitset per vertex. Bit ``j`` of
``adj[i]`` is set iff ``i`` and ``j`` are adjacent.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ParseError

MAX_VERTICES = 64

Embedding = dict  # pattern vertex -> host vertex


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 0..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def from_adjacency(cls, matrix) -> Graph:
        rows = [list(r) for r in matrix]
        n = len(rows)
        edges = []
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError("adjacency matrix must be square")
            for j, x in enumerate(row):
                if x and j > i:
                    edges.append((i, j))
                if bool(x) != bool(rows[j][i]):
                    raise ValueError(f"adjacency matrix not symmetric at ({i}, {j})")
        return cls.from_edges(n, edges)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        sel = mask_of(vs)
        return all((self.adj[v] | 1 << v) & sel == sel for v in vs)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        sel = mask_of(vs)
        return all(self.adj[v] & sel == 0 for v in vs)

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabelled ``0..len-1`` in the given order."""
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        return Graph.from_edges(
            len(vs), [(pos[u], pos[v]) for u in vs for v in bits(self.adj[u]) if v in pos and pos[u] < pos[v]]
        )

    def relabel(self, perm: Iterable[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        p = list(perm)
        return Graph.from_edges(self.n, [(p[u], p[v]) for u, v in self.edges()])

    def complement(self) -> Graph:
        return complement(self)

    def to_graph6(self) -> str:
        return encode_graph6(self)

    def to_edge_list(self) -> str:
        return format_edge_list(self)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


# -- edge-list documents ---------------------------------------------------

_HEADER = re.compile(r"^n\s*=\s*(\d+)$")
_PAIR = re.compile(r"^(\d+)\s*-\s*(\d+)$")


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n=<int>"`` followed by comma separated ``u-v`` pairs.

    The header and the pair list may sit on separate lines or be joined by a
    semicolon on one line. ``(no edges)`` denotes an empty pair list and
    ``#`` starts a comment.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        raw = raw.split("#", 1)[0]
        for part in raw.split(";"):
            if part.strip():
                lines.append((lineno, part.strip()))
    if not lines:
        raise ParseError("empty document", 1)
    lineno, header = lines[0]
    match = _HEADER.match(header)
    if not match:
        raise ParseError(f"expected 'n=<int>', got {header!r}", lineno)
    n = int(match.group(1))
    if n > MAX_VERTICES:
        raise ParseError(f"at most {MAX_VERTICES} vertices supported, got {n}", lineno)
    edges = set()
    for lineno, line in lines[1:]:
        if line == "(no edges)":
            continue
        for token in line.split(","):
            token = token.strip()
            if not token:
                continue
            pair = _PAIR.match(token)
            if not pair:
                raise ParseError(f"malformed pair {token!r}", lineno)
            u, v = int(pair.group(1)), int(pair.group(2))
            if u == v:
                raise ParseError(f"self-loop {token!r}", lineno)
            if u >= n or v >= n:
                raise ParseError(f"vertex id out of range in {token!r} (n={n})", lineno)
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges))


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    body = ",".join(f"{u}-{v}" for u, v in edges) if edges else "(no edges)"
    return f"n={g.n}\n{body}\n"


# -- graph6 ----------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
    if not line:
        raise ParseError("empty graph6 string")
    data = [ord(c) - 63 for c in line]
    for c in line:
        if not 63 <= ord(c) <= 126:
            raise ParseError(f"character {c!r} outside graph6 range 63..126")
    if data[0] < 63:
        n, body = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        raise ParseError("unsupported graph6 size prefix")
    if n > MAX_VERTICES:
        raise ParseError(f"at most {MAX_VERTICES} vertices supported, got {n}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ParseError(f"bad length: n={n} needs {(nbits + 5) // 6} data bytes, got {len(body)}")
    stream = []
    for chunk in body:
        stream.extend((chunk >> s) & 1 for s in range(5, -1, -1))
    if any(stream[nbits:]):
        raise ParseError("non-zero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if stream[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        out = [n]
    else:
        out = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    stream = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    stream += [0] * (-len(stream) % 6)
    for s in range(0, len(stream), 6):
        chunk = 0
        for b in stream[s:s + 6]:
            chunk = chunk << 1 | b
        out.append(chunk)
    return "".join(chr(x + 63) for x in out)


def parse_graph(text: str, fmt: str | None = None) -> Graph:
    """Parse either format; ``fmt=None`` sniffs for the ``n=`` header."""
    if fmt is None:
        fmt = "edgelist" if text.lstrip().startswith("n") and "=" in text else "graph6"
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "graph6":
        return parse_graph6(text)
    raise ValueError(f"unknown format {fmt!r}")


# -- induced subgraph search ----------------------------------------------

def find_induced(host: Graph, pattern: Graph) -> Embedding | None:
    """Lexicographically least induced embedding of ``pattern`` into ``host``.

    Pattern vertices are mapped in id order, each trying host vertices in
    ascending order, so the first complete map found is the least one.
    """
    p = pattern.n
    if p > host.n:
        return None
    pdeg = [pattern.degree(u) for u in range(p)]
    hdeg = [host.degree(h) for h in range(host.n)]
    image = [0] * p

    def extend(u: int, used: int) -> bool:
        if u == p:
            return True
        for h in range(host.n):
            if used >> h & 1 or hdeg[h] < pdeg[u]:
                continue
            row = host.adj[h]
            prow = pattern.adj[u]
            if all((row >> image[v] & 1) == (prow >> v & 1) for v in range(u)):
                image[u] = h
                if extend(u + 1, used | 1 << h):
                    return True
        return False

    if extend(0, 0):
        return dict(enumerate(image))
    return None


def is_induced_embedding(host: Graph, pattern: Graph, emb: Embedding) -> bool:
    if sorted(emb) != list(range(pattern.n)) or len(set(emb.values())) != pattern.n:
        return False
    if not all(0 <= h < host.n for h in emb.values()):
        return False
    return all(
        pattern.has_edge(u, v) == host.has_edge(emb[u], emb[v])
        for u in range(pattern.n) for v in range(u + 1, pattern.n)
    )
