"""Filtered random generation of graphs inside the two colorable families.

Plain G(n, p) essentially never lands in a sparse forbidden-subgraph
family, so each draw picks a structured generator biased toward the
family (clique paths and inflated cycles for the spider/net case, split
graphs and cographs for the path/pendant-complete case) or a dense
G(n, p), then keeps the result only if the exact detector confirms
membership and the graph is connected. Everything is deterministic in
the seed.
"""

from __future__ import annotations

import random

from . import families
from .detect import is_family_free
from .graph import Graph, is_connected

KINDS = ("p5-kth", "s122-n")


def _gnp(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def _blown_up_path(rng: random.Random, n: int, closed: bool) -> Graph:
    """Cliques arranged along a path or cycle, consecutive ones fully joined."""
    sizes: list[int] = []
    remaining = n
    min_groups = 5 if closed else 4
    while remaining > 0:
        cap = remaining - max(0, min_groups - len(sizes) - 1)
        sizes.append(rng.randint(1, max(1, min(3, cap))))
        remaining -= sizes[-1]
    if len(sizes) < min_groups:
        return _blown_up_path(rng, n, closed=False)
    groups: list[list[int]] = []
    s = 0
    for sz in sizes:
        groups.append(list(range(s, s + sz)))
        s += sz
    edges = []
    for grp in groups:
        edges += [(a, b) for i, a in enumerate(grp) for b in grp[i + 1:]]
    pairs = list(zip(groups, groups[1:]))
    if closed:
        pairs.append((groups[-1], groups[0]))
    for g1, g2 in pairs:
        edges += [(a, b) for a in g1 for b in g2]
    return Graph(n, edges)


def _chained_cliques(rng: random.Random, n: int) -> Graph:
    """Cliques glued in a path at shared cut vertices."""
    edges = []
    start = 0
    while start < n - 1:
        size = rng.randint(2, min(4, n - start))
        block = list(range(start, start + size))
        edges += [(a, b) for i, a in enumerate(block) for b in block[i + 1:]]
        start += size - 1
        if start == n - 1:
            break
    return Graph(n, edges)


def _split_graph(rng: random.Random, n: int) -> Graph:
    """Clique plus independent set; every outside vertex attaches to a
    nonempty random subset of the clique."""
    q = rng.randint(max(2, n // 3), max(2, 2 * n // 3))
    edges = [(a, b) for a in range(q) for b in range(a + 1, q)]
    for v in range(q, n):
        hits = [a for a in range(q) if rng.random() < 0.45] or [rng.randrange(q)]
        edges += [(a, v) for a in hits]
    return Graph(n, edges)


def _cograph(rng: random.Random, n: int) -> Graph:
    """Random cograph on n vertices; the root operation is a join, so the
    result is connected (and has no induced 4-vertex path)."""
    edges: list[tuple[int, int]] = []

    def build(vs: list[int], join: bool) -> None:
        if len(vs) <= 1:
            return
        cut = rng.randint(1, len(vs) - 1)
        left, right = vs[:cut], vs[cut:]
        if join:
            edges.extend((a, b) for a in left for b in right)
        build(left, not join if rng.random() < 0.8 else join)
        build(right, not join if rng.random() < 0.8 else join)

    build(list(range(n)), True)
    return Graph(n, edges)


def _candidate(rng: random.Random, kind: str, n: int) -> Graph:
    if kind == "s122-n":
        roll = rng.random()
        if roll < 0.30:
            return _blown_up_path(rng, n, closed=False)
        if roll < 0.55:
            return _blown_up_path(rng, n, closed=True)
        if roll < 0.70:
            return _chained_cliques(rng, n)
        if roll < 0.80:
            return families.cycle(n)
        return _gnp(rng, n, rng.uniform(0.78, 0.95))
    roll = rng.random()
    if roll < 0.40:
        return _split_graph(rng, n)
    if roll < 0.65:
        return _cograph(rng, n)
    return _gnp(rng, n, rng.uniform(0.75, 0.95))


def family_patterns(kind: str, t: int = 4) -> list[Graph]:
    if kind == "p5-kth":
        return [families.path(5), families.pendant_complete(t)]
    if kind == "s122-n":
        return [families.spider(1, 2, 2), families.generalized_net(1, 1, 1)]
    raise ValueError(f"unknown family kind {kind!r}; expected one of {KINDS}")


def sample_free_graphs(
    kind: str,
    count: int,
    n_min: int = 9,
    n_max: int = 20,
    seed: int = 0,
    t: int = 4,
    max_attempts_per_graph: int = 400,
) -> list[Graph]:
    """``count`` connected graphs inside the requested free family with
    n_min <= n <= n_max, deterministic in ``seed``."""
    patterns = family_patterns(kind, t)
    rng = random.Random(seed)
    out: list[Graph] = []
    attempts = 0
    budget = count * max_attempts_per_graph
    while len(out) < count:
        attempts += 1
        if attempts > budget:
            raise RuntimeError(
                f"sampler exceeded {budget} attempts for kind={kind!r}"
            )
        n = rng.randint(n_min, n_max)
        g = _candidate(rng, kind, n)
        if not is_connected(g):
            continue
        if not is_family_free(g, patterns):
            continue
        out.append(g)
    return out
