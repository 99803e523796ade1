"""Dominating structures and shortest-path neighborhood partitions.

Off-path vertices are classified by their exact neighborhood on a
shortest path v_0..v_k:

* single anchor at i: adjacent to v_i only (tracked for i in {0, 1, k-1, k});
* edge anchor at i: adjacent to exactly {v_{i-1}, v_i};
* straddle at i: adjacent to exactly {v_{i-1}, v_{i+1}};
* triple anchor at i: adjacent to exactly {v_{i-1}, v_i, v_{i+1}}.

On a shortest path no other multi-neighbor patterns are possible (path
neighbors of one vertex span at most three consecutive path positions).
Vertices adjacent to exactly one interior path vertex fit no class and
go to ``unclassified``. ``covered`` is the path plus its neighborhood,
``remote`` the rest.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graph import Graph, is_connected, is_shortest_path, iter_bits


class NotShortestPathError(ValueError):
    """The supplied vertex sequence is not a shortest path."""


@dataclass(frozen=True)
class DominatingStructure:
    """A dominating clique or a dominating path on three vertices."""

    kind: str  # "clique" | "p3"
    vertices: tuple[int, ...]
    induced: bool = True  # for p3: whether the endpoints are non-adjacent


@dataclass(frozen=True)
class DiameterPartition:
    path: tuple[int, ...]
    single_anchor: dict[int, frozenset[int]]
    edge_anchor: dict[int, frozenset[int]]
    straddle: dict[int, frozenset[int]]
    triple_anchor: dict[int, frozenset[int]]
    covered: frozenset[int]
    remote: frozenset[int]
    unclassified: frozenset[int]
    barrier: frozenset[int] | None
    near_start: frozenset[int] | None
    near_end: frozenset[int] | None

    @property
    def k(self) -> int:
        return len(self.path) - 1

    def all_classified(self) -> frozenset[int]:
        out: set[int] = set()
        for d in (self.single_anchor, self.edge_anchor, self.straddle, self.triple_anchor):
            for s in d.values():
                out |= s
        return frozenset(out)


@dataclass(frozen=True)
class Lemma1Report:
    """Pass/fail per containment property, with a violating (vertex on the
    class side, outside neighbor) witness for each failure."""

    applicable: bool
    checks: dict[str, tuple[bool, tuple[int, int] | None]]

    @property
    def all_passed(self) -> bool:
        return all(ok for ok, _ in self.checks.values())


def classify_against_path(g: Graph, p: tuple[int, ...] | list[int]) -> DiameterPartition:
    """Partition the off-path vertices of a shortest path by neighborhood."""
    path = tuple(p)
    if not is_shortest_path(g, path):
        raise NotShortestPathError(f"{path} is not a shortest path")
    k = len(path) - 1
    on_path = set(path)
    index_of = {v: i for i, v in enumerate(path)}

    single_idx = sorted({0, 1, k - 1, k} & set(range(k + 1)))
    single: dict[int, set[int]] = {i: set() for i in single_idx}
    edge: dict[int, set[int]] = {i: set() for i in range(1, k + 1)}
    straddle: dict[int, set[int]] = {i: set() for i in range(1, k)}
    triple: dict[int, set[int]] = {i: set() for i in range(1, k)}
    unclassified: set[int] = set()
    remote: set[int] = set()

    for z in range(g.n):
        if z in on_path:
            continue
        hits = sorted(index_of[w] for w in iter_bits(g.bits[z]) if w in index_of)
        if not hits:
            remote.add(z)
            continue
        if len(hits) >= 2:
            span = hits[-1] - hits[0]
            if span > 2 or len(hits) > 3:
                raise AssertionError(
                    f"path neighbors {hits} of {z} violate the shortest-path window"
                )
        if len(hits) == 1:
            i = hits[0]
            if i in single:
                single[i].add(z)
            else:
                unclassified.add(z)
        elif len(hits) == 2:
            a, b = hits
            if b == a + 1:
                edge[b].add(z)
            elif b == a + 2:
                straddle[a + 1].add(z)
            else:  # unreachable on a shortest path; guarded above
                unclassified.add(z)
        else:
            a, b, c = hits
            if b == a + 1 and c == b + 1:
                triple[b].add(z)
            else:
                unclassified.add(z)

    classified: set[int] = set()
    for d in (single, edge, straddle, triple):
        for s in d.values():
            classified |= s
    covered = on_path | classified | unclassified
    barrier = near_start = near_end = None
    if k >= 3:
        b: set[int] = set(path[1:k])
        for i in range(2, k - 1):
            b |= triple[i]
        for i in range(2, k):
            b |= edge[i]
        for i in range(1, k):
            b |= straddle[i]
        b |= single.get(1, set())
        b |= single.get(k - 1, set())
        barrier = frozenset(b)
        near_start = frozenset(single.get(0, set()) | edge[1] | triple[1])
        near_end = frozenset(triple[k - 1] | edge[k] | single.get(k, set()))

    return DiameterPartition(
        path=path,
        single_anchor={i: frozenset(s) for i, s in single.items()},
        edge_anchor={i: frozenset(s) for i, s in edge.items()},
        straddle={i: frozenset(s) for i, s in straddle.items()},
        triple_anchor={i: frozenset(s) for i, s in triple.items()},
        covered=frozenset(covered),
        remote=frozenset(remote),
        unclassified=frozenset(unclassified),
        barrier=barrier,
        near_start=near_start,
        near_end=near_end,
    )


def check_lemma1(g: Graph, part: DiameterPartition) -> Lemma1Report:
    """Evaluate the five neighborhood-containment properties that hold for
    partitions of long shortest paths in spider/net-free graphs.

    Runnable on any graph as a falsification probe; requires a path of
    length at least 4.
    """
    k = part.k
    if k < 4:
        raise ValueError("the checks need a shortest path of length >= 4")
    covered = part.covered
    checks: dict[str, tuple[bool, tuple[int, int] | None]] = {}

    def contained(name: str, members: list[int], allowed: frozenset[int]) -> None:
        for z in members:
            for w in iter_bits(g.bits[z]):
                if w not in allowed:
                    checks[name] = (False, (z, w))
                    return
        checks[name] = (True, None)

    edge_members = [z for i in range(2, k) for z in part.edge_anchor[i]]
    contained("edge_anchor_neighbors_covered", edge_members, covered)
    triple_members = [z for i in range(2, k - 1) for z in part.triple_anchor[i]]
    contained("triple_anchor_neighbors_covered", triple_members, covered)
    straddle_members = [z for i in range(1, k) for z in part.straddle[i]]
    contained("straddle_neighbors_covered", straddle_members, covered)

    on_path = set(part.path)
    ok, witness = True, None
    for z in sorted(part.remote):
        for w in iter_bits(g.bits[z]):
            if w in on_path:
                ok, witness = False, (z, w)
                break
        if not ok:
            break
    checks["remote_off_path"] = (ok, witness)

    ends = (part.near_start or frozenset()) | (part.near_end or frozenset())
    ok, witness = True, None
    for z in sorted(part.remote):
        for w in iter_bits(g.bits[z]):
            if w in covered and w not in ends:
                ok, witness = False, (z, w)
                break
        if not ok:
            break
    checks["remote_enters_at_ends"] = (ok, witness)

    return Lemma1Report(applicable=True, checks=checks)


# -- dominating structures -------------------------------------------------

_EXACT_LEVEL_BUDGET = 200_000


def _dominates(g: Graph, mask: int) -> bool:
    cover = mask
    for v in iter_bits(mask):
        cover |= g.bits[v]
    return cover == (1 << g.n) - 1


def _is_clique(g: Graph, members: tuple[int, ...]) -> bool:
    return all(g.has_edge(a, b) for a, b in combinations(members, 2))


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques (pivoting Bron-Kerbosch), sorted for determinism."""
    out: list[tuple[int, ...]] = []
    bits = g.bits

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(tuple(iter_bits(r)))
            return
        pivot_pool = p | x
        pivot = max(iter_bits(pivot_pool), key=lambda v: (bits[v] & p).bit_count())
        for v in iter_bits(p & ~bits[pivot]):
            expand(r | 1 << v, p & bits[v], x & bits[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, (1 << g.n) - 1, 0)
    return sorted(out)


def find_dominating_clique_or_p3(g: Graph) -> DominatingStructure | None:
    """A dominating clique (smallest size first, lexicographic within a
    size) or, failing that, a dominating path on three vertices.

    Exhaustive size-by-size clique search is used while the candidate
    count stays within a fixed budget; past it, the search switches to
    maximal cliques (a dominating clique exists iff some maximal clique
    dominates) and greedily shrinks the best one. The p3 search accepts
    any path on three vertices and records whether it is induced.
    """
    if not is_connected(g):
        raise ValueError("domination search expects a connected graph")
    n = g.n
    full = (1 << n) - 1
    # size 1 and 2 are always cheap
    for v in range(n):
        if g.bits[v] | 1 << v == full:
            return DominatingStructure("clique", (v,))
    for u in range(n):
        for v in iter_bits(g.bits[u]):
            if v > u and _dominates(g, 1 << u | 1 << v):
                return DominatingStructure("clique", (u, v))

    maxima = None
    size = 3
    while True:
        if comb(n, size) > _EXACT_LEVEL_BUDGET:
            break
        found_any = False
        for members in combinations(range(n), size):
            if not _is_clique(g, members):
                continue
            found_any = True
            mask = 0
            for v in members:
                mask |= 1 << v
            if _dominates(g, mask):
                return DominatingStructure("clique", members)
        if not found_any:
            maxima = []  # no cliques of this size, so none larger either
            break
        size += 1
    if maxima is None:
        maxima = [c for c in maximal_cliques(g) if len(c) >= size]
    dominating = []
    for c in maxima:
        mask = 0
        for v in c:
            mask |= 1 << v
        if _dominates(g, mask):
            dominating.append(c)
    if dominating:
        best = min(dominating, key=lambda c: (len(c), c))
        members = list(best)
        # drop vertices (ascending) while domination survives
        i = 0
        while i < len(members):
            trial = members[:i] + members[i + 1:]
            mask = 0
            for v in trial:
                mask |= 1 << v
            if trial and _dominates(g, mask):
                members = trial
            else:
                i += 1
        return DominatingStructure("clique", tuple(members))

    for u in range(n):
        for v in iter_bits(g.bits[u]):
            for w in iter_bits(g.bits[v]):
                if w == u:
                    continue
                if _dominates(g, 1 << u | 1 << v | 1 << w):
                    return DominatingStructure(
                        "p3", (u, v, w), induced=not g.has_edge(u, w)
                    )
    return None
