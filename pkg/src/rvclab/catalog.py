"""Exhaustive catalogs of small connected graphs, one per isomorphism class.

Graphs on n vertices are produced by extending every (n-1)-vertex graph
with a new last vertex over all nonempty neighborhoods (every connected
graph has a non-cut vertex, so the scheme is complete for connected
graphs), then deduplicated. Deduplication buckets candidates by a strong
invariant (per-vertex degree, triangle count and distance multiset) and
confirms collisions with an exact induced-embedding isomorphism test.

The spider/net-restricted catalog extends only restricted parents and
rejects any candidate where the new vertex completes an induced
spider(1,2,2) or net; the restriction is hereditary, so this enumerates
exactly the connected graphs avoiding both patterns. It is what makes
n = 9 affordable: only a few thousand such graphs exist, against 261080
connected 9-vertex graphs overall.
"""

from __future__ import annotations

from itertools import combinations
from pathlib import Path

from . import families
from .detect import find_induced
from .graph import Graph, diameter_and_path, iter_bits, parse_graph6, serialize_graph6

# Connected graphs per vertex count, up to isomorphism (used as a
# self-check oracle for the generator).
KNOWN_CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}

_MAX_FULL = 8
_MAX_RESTRICTED = 9

_memory: dict[tuple[str, int], list[Graph]] = {}


def _distance_rows(rows: tuple[int, ...]) -> list[list[int]]:
    n = len(rows)
    out = []
    for u in range(n):
        dist = [0] * n
        seen = 1 << u
        frontier = seen
        d = 0
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= rows[v]
            nxt &= ~seen
            d += 1
            for v in iter_bits(nxt):
                dist[v] = d
            seen |= nxt
            frontier = nxt
        out.append(dist)
    return out


def _invariant(rows: tuple[int, ...]) -> tuple:
    n = len(rows)
    dist = _distance_rows(rows)
    per_vertex = []
    for u in range(n):
        tri = 0
        for v in iter_bits(rows[u]):
            tri += (rows[u] & rows[v]).bit_count()
        per_vertex.append((rows[u].bit_count(), tri, tuple(sorted(dist[u]))))
    return tuple(sorted(per_vertex))


class _Deduper:
    def __init__(self) -> None:
        self.buckets: dict[tuple, list[Graph]] = {}
        self.graphs: list[Graph] = []

    def add(self, rows: tuple[int, ...]) -> None:
        key = _invariant(rows)
        bucket = self.buckets.setdefault(key, [])
        g = Graph.from_bits(rows)
        for other in bucket:
            if find_induced(g, other) is not None:
                return
        bucket.append(g)
        self.graphs.append(g)


_SPIDER_DEGSEQ = (1, 1, 1, 2, 2, 3)
_NET_DEGSEQ = (1, 1, 1, 3, 3, 3)


def _compress(rows: tuple[int, ...], subset: tuple[int, ...]) -> Graph:
    sub = [0] * len(subset)
    for i, u in enumerate(subset):
        row = rows[u]
        for j, v in enumerate(subset):
            if row >> v & 1:
                sub[i] |= 1 << j
    return Graph.from_bits(sub)


def _new_vertex_clean(rows: tuple[int, ...], spider: Graph, net: Graph) -> bool:
    """No induced spider(1,2,2) or net uses the newest (last) vertex."""
    n = len(rows)
    nv = n - 1
    for combo in combinations(range(nv), 5):
        subset = combo + (nv,)
        submask = 0
        for v in subset:
            submask |= 1 << v
        degs = sorted((rows[v] & submask).bit_count() for v in subset)
        degs = tuple(degs)
        if degs == _SPIDER_DEGSEQ:
            if find_induced(spider, _compress(rows, subset)) is not None:
                return False
        elif degs == _NET_DEGSEQ:
            if find_induced(net, _compress(rows, subset)) is not None:
                return False
    return True


def _augment(parents: list[Graph]) -> list[Graph]:
    dedup = _Deduper()
    for parent in parents:
        n = parent.n + 1
        base = list(parent.bits) + [0]
        for mask in range(1, 1 << parent.n):
            rows = base[:]
            rows[n - 1] = mask
            for v in iter_bits(mask):
                rows[v] |= 1 << (n - 1)
            dedup.add(tuple(rows))
    return dedup.graphs


def _augment_free_long(parents: list[Graph]) -> list[Graph]:
    """Extensions of restricted parents that are still restricted and have
    diameter >= 4.

    The child diameter is computed from the parent distance matrix: old
    distances never grow when a vertex is added, routes through the new
    vertex cost distS(x) + 2 + distS(y), and the new vertex itself sits
    at 1 + distS(y). Only children passing the diameter test pay for the
    induced-pattern check. Every connected child with diameter >= 4 has a
    non-cut vertex whose removal leaves diameter >= 3, so extending
    diameter >= 3 parents is exhaustive.
    """
    spider = families.spider(1, 2, 2)
    net = families.generalized_net(1, 1, 1)
    dedup = _Deduper()
    for parent in parents:
        pn = parent.n
        n = pn + 1
        dist = _distance_rows(parent.bits)
        far_pairs = [
            (x, y)
            for x in range(pn)
            for y in range(x + 1, pn)
            if dist[x][y] >= 4
        ]
        base = list(parent.bits) + [0]
        for mask in range(1, 1 << pn):
            members = list(iter_bits(mask))
            dist_s = [min(dist[x][s] for s in members) for x in range(pn)]
            long = any(d >= 3 for d in dist_s)
            if not long:
                for x, y in far_pairs:
                    if dist_s[x] + 2 + dist_s[y] >= 4:
                        long = True
                        break
            if not long:
                continue
            rows = base[:]
            rows[n - 1] = mask
            for v in iter_bits(mask):
                rows[v] |= 1 << (n - 1)
            rows_t = tuple(rows)
            if not _new_vertex_clean(rows_t, spider, net):
                continue
            dedup.add(rows_t)
    return dedup.graphs


def _cache_file(cache_dir: str | Path | None, kind: str, n: int) -> Path | None:
    if cache_dir is None:
        return None
    return Path(cache_dir) / f"{kind}_{n}.g6"


def _load(path: Path | None) -> list[Graph] | None:
    if path is None or not path.exists():
        return None
    return [parse_graph6(line) for line in path.read_text().splitlines() if line]


def _store(path: Path | None, graphs: list[Graph]) -> None:
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("".join(serialize_graph6(g) + "\n" for g in graphs))


def connected_graphs(n: int, cache_dir: str | Path | None = None) -> list[Graph]:
    """All connected graphs on exactly n vertices, up to isomorphism."""
    if not 1 <= n <= _MAX_FULL:
        raise ValueError(f"full catalogs cover 1 <= n <= {_MAX_FULL}")
    key = ("connected", n)
    if key in _memory:
        return _memory[key]
    cached = _load(_cache_file(cache_dir, "connected", n))
    if cached is not None:
        _memory[key] = cached
        return cached
    if n == 1:
        graphs = [Graph(1)]
    else:
        graphs = _augment(connected_graphs(n - 1, cache_dir))
    expected = KNOWN_CONNECTED_COUNTS[n]
    if len(graphs) != expected:
        raise AssertionError(
            f"generated {len(graphs)} connected graphs on {n} vertices, "
            f"expected {expected}"
        )
    _store(_cache_file(cache_dir, "connected", n), graphs)
    _memory[key] = graphs
    return graphs


def connected_graphs_upto(n: int, cache_dir: str | Path | None = None) -> list[Graph]:
    out: list[Graph] = []
    for i in range(1, n + 1):
        out.extend(connected_graphs(i, cache_dir))
    return out


def spider_net_free_graphs(n: int, cache_dir: str | Path | None = None) -> list[Graph]:
    """Connected graphs on exactly n <= 8 vertices with no induced
    spider(1,2,2) and no induced net, up to isomorphism."""
    if not 1 <= n <= _MAX_FULL:
        raise ValueError(f"restricted catalogs cover 1 <= n <= {_MAX_FULL}")
    key = ("spider_net_free", n)
    if key in _memory:
        return _memory[key]
    cached = _load(_cache_file(cache_dir, "spider_net_free", n))
    if cached is not None:
        _memory[key] = cached
        return cached
    spider = families.spider(1, 2, 2)
    net = families.generalized_net(1, 1, 1)
    graphs = [
        g
        for g in connected_graphs(n, cache_dir)
        if find_induced(spider, g) is None and find_induced(net, g) is None
    ]
    _store(_cache_file(cache_dir, "spider_net_free", n), graphs)
    _memory[key] = graphs
    return graphs


def spider_net_free_long_graphs(
    n: int, cache_dir: str | Path | None = None
) -> list[Graph]:
    """Connected spider(1,2,2)/net-free graphs of diameter >= 4 on exactly
    n <= 9 vertices, up to isomorphism.

    For n = 9 these are enumerated directly (extending restricted parents
    of diameter >= 3) instead of filtering the full 9-vertex catalog,
    whose 261080 classes are far beyond desk scale.
    """
    if not 1 <= n <= _MAX_RESTRICTED:
        raise ValueError(f"restricted catalogs cover 1 <= n <= {_MAX_RESTRICTED}")
    key = ("spider_net_free_long", n)
    if key in _memory:
        return _memory[key]
    cached = _load(_cache_file(cache_dir, "spider_net_free_long", n))
    if cached is not None:
        _memory[key] = cached
        return cached
    if n <= _MAX_FULL:
        graphs = [
            g
            for g in spider_net_free_graphs(n, cache_dir)
            if diameter_and_path(g)[0] >= 4
        ]
    else:
        parents = [
            g
            for g in spider_net_free_graphs(n - 1, cache_dir)
            if diameter_and_path(g)[0] >= 3
        ]
        graphs = _augment_free_long(parents)
    _store(_cache_file(cache_dir, "spider_net_free_long", n), graphs)
    _memory[key] = graphs
    return graphs
