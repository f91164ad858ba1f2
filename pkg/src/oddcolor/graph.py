"""Simple undirected graphs, graph6 ingestion and a few basic invariants."""
from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Sequence

GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Raised for structurally invalid graphs."""


class Graph6Error(ValueError):
    """graph6 decoding error; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Neighbor lists keep the order they were given in; use ``edges()`` for a
    canonical listing.
    """

    __slots__ = ("_adj", "_nbr_sets")

    def __init__(self, adjacency: Sequence[Sequence[int]]):
        adj = tuple(tuple(int(u) for u in nbrs) for nbrs in adjacency)
        n = len(adj)
        sets = []
        for v, nbrs in enumerate(adj):
            s = set(nbrs)
            if len(s) != len(nbrs):
                raise GraphError(f"vertex {v} lists a neighbor twice")
            if v in s:
                raise GraphError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < n:
                    raise GraphError(f"vertex {v} has out-of-range neighbor {u}")
            sets.append(frozenset(s))
        for v, s in enumerate(sets):
            for u in s:
                if v not in sets[u]:
                    raise GraphError(f"asymmetric adjacency: {v} lists {u} but not conversely")
        self._adj = adj
        self._nbr_sets = tuple(sets)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for {n} vertices")
            adj[u].append(v)
            adj[v].append(u)
        return cls(adj)

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._nbr_sets[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u in range(self.n) for v in self._adj[u] if u < v)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for u in self._adj[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return len(seen) == self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._nbr_sets == other._nbr_sets

    def __hash__(self) -> int:
        return hash(self._nbr_sets)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    counts: dict[int, int]


def degree_profile(g: Graph) -> DegreeProfile:
    degrees = tuple(g.degree(v) for v in range(g.n))
    return DegreeProfile(degrees, dict(sorted(Counter(degrees).items())))


def girth(g: Graph) -> float | int:
    """Length of a shortest cycle, ``math.inf`` for forests.

    BFS from every vertex; a non-tree edge (u, w) seen from root r closes a
    closed walk of length dist(u) + dist(w) + 1, the minimum of which over all
    roots is the girth.
    """
    best = math.inf
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


# -- graph6 -----------------------------------------------------------------

def _encode_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def encode_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no newline)."""
    n = g.n
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + sum(bit << (5 - k) for k, bit in enumerate(bits[p:p + 6]))
        for p in range(0, len(bits), 6)
    )
    return (_encode_size(n) + body).decode("ascii")


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line.  A leading ``>>graph6<<`` header is accepted."""
    data = text.encode("ascii", errors="replace") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n")
    pos = 0
    if data.startswith(GRAPH6_HEADER.encode()):
        pos = len(GRAPH6_HEADER)
    for i in range(pos, len(data)):
        if not 63 <= data[i] <= 126:
            raise Graph6Error(f"byte {data[i]!r} outside the graph6 range 63..126", i)
    if pos >= len(data):
        raise Graph6Error("missing size prefix", pos)

    def take(count: int) -> int:
        nonlocal pos
        if pos + count > len(data):
            raise Graph6Error("truncated size prefix", len(data))
        value = 0
        for b in data[pos:pos + count]:
            if b == 126:
                raise Graph6Error("malformed size prefix", pos)
            value = (value << 6) | (b - 63)
        pos += count
        return value

    if data[pos] != 126:
        n = data[pos] - 63
        pos += 1
    elif pos + 1 < len(data) and data[pos + 1] == 126:
        pos += 2
        n = take(6)
    else:
        pos += 1
        n = take(3)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise Graph6Error(f"expected {nbytes} adjacency bytes, got {len(body)}", len(data))
    if len(body) > nbytes:
        raise Graph6Error("trailing garbage after adjacency bytes", pos + nbytes)

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    return [parse_graph6(line.strip()) for line in lines if line.strip()]
