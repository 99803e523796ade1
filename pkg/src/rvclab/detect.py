"""Induced-subgraph search, family-freeness tests, and the pair classifier."""

from __future__ import annotations

from dataclasses import dataclass

from . import families
from .graph import Graph, is_connected, iter_bits


def find_induced(pattern: Graph, host: Graph) -> dict[int, int] | None:
    """First induced embedding of ``pattern`` into ``host``, or None.

    Backtracking assigns pattern vertices in order of descending degree
    (ties by id) and tries host candidates in ascending order, pruning by
    degree and by adjacency/non-adjacency to already-mapped vertices, so
    the returned embedding is the lexicographically least under that
    order. Keys are pattern vertex ids, values host vertex ids.
    """
    p, h = pattern.n, host.n
    if p > h:
        return None
    order = sorted(range(p), key=lambda v: (-pattern.degree(v), v))
    pos_of = {v: i for i, v in enumerate(order)}
    # per ordered position: masks over earlier positions that must be
    # adjacent / non-adjacent in the host
    adj_earlier = []
    non_earlier = []
    for i, v in enumerate(order):
        a = nb = 0
        for j in range(i):
            if pattern.has_edge(v, order[j]):
                a |= 1 << j
            else:
                nb |= 1 << j
        adj_earlier.append(a)
        non_earlier.append(nb)
    full = (1 << h) - 1
    hbits = host.bits
    eligible = []
    for v in order:
        dv = pattern.degree(v)
        eligible.append(
            sum(1 << u for u in range(h) if hbits[u].bit_count() >= dv)
        )

    assignment = [0] * p

    def extend(i: int, used: int) -> bool:
        if i == p:
            return True
        cand = eligible[i] & ~used
        a = adj_earlier[i]
        for j in iter_bits(a):
            cand &= hbits[assignment[j]]
            if not cand:
                return False
        for j in iter_bits(non_earlier[i]):
            cand &= full & ~hbits[assignment[j]]
            if not cand:
                return False
        for u in iter_bits(cand):
            assignment[i] = u
            if extend(i + 1, used | 1 << u):
                return True
        return False

    if not extend(0, 0):
        return None
    return {v: assignment[pos_of[v]] for v in range(p)}


def is_family_free(host: Graph, patterns: list[Graph]) -> bool:
    """True iff no pattern occurs in ``host`` as an induced subgraph."""
    if not patterns:
        raise ValueError("pattern list must be nonempty")
    return all(find_induced(q, host) is None for q in patterns)


def is_isomorphic(a: Graph, b: Graph) -> bool:
    """Isomorphism via induced embedding between equal-sized graphs."""
    if a.n != b.n or a.m != b.m:
        return False
    return find_induced(a, b) is not None


@dataclass(frozen=True)
class PairClass:
    """Verdict for a forbidden pair (x, y).

    ``bounded`` means every connected graph avoiding both patterns has
    rainbow vertex-connection number at most diameter plus a constant.
    ``clause`` names the matching condition: "p4" (one pattern embeds in
    the 4-vertex path), "p5-pendant-complete" (one is the 5-vertex path
    and the other embeds in a pendant-complete graph, with the smallest
    witness t recorded), or "spider-net". ``swapped`` records whether the
    clause matched with the arguments exchanged.
    """

    verdict: str
    clause: str | None = None
    witness_t: int | None = None
    swapped: bool = False

    @property
    def bounded(self) -> bool:
        return self.verdict == "bounded"


def _embeds_in_pendant_complete(y: Graph) -> int | None:
    """Smallest t >= 4 with y induced in pendant-complete(t), searched up
    to max(4, |V(y)|); any connected piece of such a graph on v vertices
    already embeds for t = v, so the cap is sufficient."""
    for t in range(4, max(4, y.n) + 1):
        if find_induced(y, families.pendant_complete(t)) is not None:
            return t
    return None


def classify_pair(x: Graph, y: Graph) -> PairClass:
    """Decide whether forbidding the induced pair (x, y) bounds rvc by
    diameter plus a constant, and report the clause that applies."""
    if not is_connected(x) or not is_connected(y):
        raise ValueError("classify_pair needs connected patterns")
    p4 = families.path(4)
    p5 = families.path(5)
    s122 = families.spider(1, 2, 2)
    net = families.generalized_net(1, 1, 1)

    for swapped, (a, b) in ((False, (x, y)), (True, (y, x))):
        if find_induced(a, p4) is not None:
            return PairClass("bounded", "p4", swapped=swapped)
    for swapped, (a, b) in ((False, (x, y)), (True, (y, x))):
        if is_isomorphic(a, p5):
            t = _embeds_in_pendant_complete(b)
            if t is not None:
                return PairClass("bounded", "p5-pendant-complete", t, swapped)
    for swapped, (a, b) in ((False, (x, y)), (True, (y, x))):
        if find_induced(a, s122) is not None and find_induced(b, net) is not None:
            return PairClass("bounded", "spider-net", swapped=swapped)
    return PairClass("unbounded")
