"""Immutable simple undirected graphs with graph6 I/O and BFS utilities.

Vertices are dense 0-based integers. The vertex order of a parsed graph6
string is authoritative and never permuted, so anything derived from a
catalog line (diameter paths, colorings, embeddings) is reproducible.

graph6 format: every byte is 63 + a 6-bit value. The header byte encodes
the vertex count n (only the single-byte regime n <= 62 is supported).
The body packs the upper triangle of the adjacency matrix in column order
x(0,1), x(0,2), x(1,2), x(0,3), ... into 6-bit groups, most significant
bit first, zero-padded to a multiple of 6.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator, Sequence

INFINITE = math.inf

MAX_VERTICES = 62  # single-byte graph6 header regime

_G6_HEADER_PREFIX = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input (bad length, byte out of range, n > 62)."""


class DisconnectedGraphError(ValueError):
    """An operation that requires a connected graph got a disconnected one."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph; immutable after construction.

    Adjacency is stored as one int bitmask per vertex (``bits``), from
    which the boolean matrix and sorted adjacency lists are derived.
    Instances are safe to share across parallel workers.
    """

    __slots__ = ("n", "bits", "_lists", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={n}")
        if n > MAX_VERTICES:
            raise ValueError(f"n={n} exceeds the supported maximum {MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "bits", tuple(rows))
        object.__setattr__(self, "_lists", None)
        object.__setattr__(self, "_m", None)

    @classmethod
    def from_bits(cls, rows: Sequence[int]) -> "Graph":
        """Build from adjacency bitmask rows (must already be symmetric)."""
        g = cls.__new__(cls)
        n = len(rows)
        if n < 1 or n > MAX_VERTICES:
            raise ValueError(f"unsupported vertex count {n}")
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "bits", tuple(rows))
        object.__setattr__(g, "_lists", None)
        object.__setattr__(g, "_m", None)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- basic accessors -------------------------------------------------

    @property
    def adjacency_lists(self) -> tuple[tuple[int, ...], ...]:
        lists = object.__getattribute__(self, "_lists")
        if lists is None:
            lists = tuple(tuple(iter_bits(row)) for row in self.bits)
            object.__setattr__(self, "_lists", lists)
        return lists

    @property
    def m(self) -> int:
        m = object.__getattribute__(self, "_m")
        if m is None:
            m = sum(row.bit_count() for row in self.bits) // 2
            object.__setattr__(self, "_m", m)
        return m

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency_lists[v]

    def degree(self, v: int) -> int:
        return self.bits[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.bits[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.bits[u]) if u < v]

    def adjacency_matrix(self) -> list[list[bool]]:
        return [[bool(row >> v & 1) for v in range(self.n)] for row in self.bits]

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.bits == other.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- graph6 codec --------------------------------------------------------


def parse_graph6(line: str) -> Graph:
    """Decode a graph6 string (optionally prefixed with '>>graph6<<')."""
    s = line.strip()
    if s.startswith(_G6_HEADER_PREFIX):
        s = s[len(_G6_HEADER_PREFIX):].strip()
    if not s:
        raise Graph6Error("empty graph6 string")
    data = s.encode("ascii", errors="replace")
    vals = []
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} out of graph6 range 63..126")
        vals.append(b - 63)
    n = vals[0]
    if n == 63:
        raise Graph6Error("multi-byte vertex counts (n > 62) are not supported")
    body = vals[1:]
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise Graph6Error(
            f"body length {len(body)} does not match n={n} (expected {expected} bytes)"
        )
    rows = [0] * max(n, 1)
    idx = 0
    for j in range(1, n):
        for i in range(j):
            word = body[idx // 6]
            bit = word >> (5 - idx % 6) & 1
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    if body:
        # trailing pad bits must be zero for the encoding to round-trip
        tail = body[-1] & ((1 << (expected * 6 - nbits)) - 1)
        if tail:
            raise Graph6Error("nonzero padding bits")
    if n == 0:
        raise Graph6Error("empty graphs are not supported")
    return Graph.from_bits(rows[:n])


def serialize_graph6(g: Graph) -> str:
    """Encode a graph as canonical graph6 text (no trailing newline)."""
    n = g.n
    if n > MAX_VERTICES:
        raise Graph6Error(f"n={n} exceeds the graph6 single-byte regime")
    out = [n + 63]
    acc = 0
    nb = 0
    for j in range(1, n):
        row_j = g.bits[j]
        for i in range(j):
            acc = acc << 1 | (row_j >> i & 1)
            nb += 1
            if nb == 6:
                out.append(acc + 63)
                acc = 0
                nb = 0
    if nb:
        out.append((acc << (6 - nb)) + 63)
    return bytes(out).decode("ascii")


# -- traversal -----------------------------------------------------------


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Shortest-path lengths from ``source``; unreachable entries are INFINITE."""
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range")
    dist: list[float] = [INFINITE] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    bits = g.bits
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= bits[v]
        nxt &= ~seen
        d += 1
        for v in iter_bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    bits = g.bits
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= bits[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def diameter_and_path(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Diameter and a canonical diameter path.

    Among all pairs at maximum distance the lexicographically least (u, v)
    is chosen, then the lexicographically least shortest u-v path (at each
    step the smallest next vertex that still lies on some shortest path).
    """
    if not is_connected(g):
        raise DisconnectedGraphError("diameter undefined for disconnected graphs")
    n = g.n
    dists = [bfs_distances(g, u) for u in range(n)]
    d = 0
    pair = (0, 0)
    for u in range(n):
        row = dists[u]
        for v in range(u + 1, n):
            if row[v] > d:
                d = int(row[v])
                pair = (u, v)
    u, v = pair
    path = [u]
    cur = u
    dist_from_v = dists[v]
    for step in range(1, d + 1):
        for w in iter_bits(g.bits[cur]):
            if dists[u][w] == step and dist_from_v[w] == d - step:
                path.append(w)
                cur = w
                break
    return d, tuple(path)


def shortest_path(g: Graph, u: int, v: int) -> tuple[int, ...]:
    """Lexicographically least shortest u-v path (same rule as diameter paths)."""
    du = bfs_distances(g, u)
    dv = bfs_distances(g, v)
    if du[v] == INFINITE:
        raise DisconnectedGraphError(f"no path between {u} and {v}")
    d = int(du[v])
    path = [u]
    cur = u
    for step in range(1, d + 1):
        for w in iter_bits(g.bits[cur]):
            if du[w] == step and dv[w] == d - step:
                path.append(w)
                cur = w
                break
    return tuple(path)


def induced_subgraph(g: Graph, vs: Iterable[int]) -> Graph:
    """Subgraph induced by ``vs``, relabeled 0..|vs|-1 in ascending order."""
    sel = sorted(set(vs))
    if not sel:
        raise ValueError("vertex set must be nonempty")
    if sel[0] < 0 or sel[-1] >= g.n:
        raise ValueError(f"vertex set {sel} out of range for n={g.n}")
    pos = {v: i for i, v in enumerate(sel)}
    rows = [0] * len(sel)
    for i, v in enumerate(sel):
        for w in iter_bits(g.bits[v]):
            if w in pos:
                rows[i] |= 1 << pos[w]
    return Graph.from_bits(rows)


def is_shortest_path(g: Graph, path: Sequence[int]) -> bool:
    """True if ``path`` is a shortest path between its endpoints."""
    if len(path) == 0:
        return False
    if len(set(path)) != len(path):
        return False
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            return False
    dist = bfs_distances(g, path[0])
    return dist[path[-1]] == len(path) - 1
