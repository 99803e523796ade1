"""Independent brute-force oracles the implementation is checked against.

These deliberately share no machinery with the package: induced-subgraph
presence is decided by subset enumeration plus permutation matching, and
rainbow connectivity by depth-first enumeration of simple paths.
"""

from itertools import combinations, permutations

from rvclab.graph import Graph


def induced_occurs_bruteforce(pattern: Graph, host: Graph) -> bool:
    """Some |V(pattern)|-subset of the host induces a copy of the pattern."""
    q = pattern.n
    if q > host.n:
        return False
    pat_deg = sorted(pattern.degree(v) for v in range(q))
    for sub in combinations(range(host.n), q):
        degs = sorted(
            sum(1 for b in sub if host.has_edge(a, b)) for a in sub
        )
        if degs != pat_deg:
            continue
        for perm in permutations(sub):
            if all(
                host.has_edge(perm[u], perm[v]) == pattern.has_edge(u, v)
                for u in range(q)
                for v in range(u + 1, q)
            ):
                return True
    return False


def rainbow_pair_bruteforce(g: Graph, colors, u: int, v: int) -> bool:
    """Does a simple u-v path with pairwise distinct internal colors exist?

    Depth-first enumeration of simple paths; a prefix with a repeated
    internal color cannot be completed into a qualifying path, so cutting
    it is equivalent to enumerating every simple path and testing it.
    """
    if u == v:
        return True

    def dfs(x, visited, used_colors):
        for w in g.neighbors(x):
            if w == v:
                return True
            if visited >> w & 1:
                continue
            c = colors[w]
            if used_colors >> c & 1:
                continue
            if dfs(w, visited | 1 << w, used_colors | 1 << c):
                return True
        return False

    return dfs(u, 1 << u, 0)


def rainbow_pair_exhaustive(g: Graph, colors, u: int, v: int) -> bool:
    """Fully unpruned variant: enumerate every simple u-v path via
    permutations of intermediate vertices, then test it. Only usable for
    tiny graphs; cross-checks the pruned oracle."""
    if u == v:
        return True
    if g.has_edge(u, v):
        return True
    others = [x for x in range(g.n) if x not in (u, v)]
    for r in range(1, len(others) + 1):
        for mid in permutations(others, r):
            walk = (u, *mid, v)
            if all(g.has_edge(a, b) for a, b in zip(walk, walk[1:])):
                internal = [colors[x] for x in mid]
                if len(set(internal)) == len(internal):
                    return True
    return False


def rainbow_verdict_bruteforce(g: Graph, colors):
    """(verdict, first failing pair) by the simple-path oracle, scanning
    pairs in lexicographic order."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not rainbow_pair_bruteforce(g, colors, u, v):
                return False, (u, v)
    return True, None
