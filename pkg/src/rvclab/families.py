"""Constructors for the named graph families used throughout the package.

Labeling is fixed per family (core vertices first, then attachments in
order) so graph6 output is stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph


@dataclass(frozen=True)
class FamilySpec:
    """A family tag plus its integer parameters.

    Tags: path | cycle | complete | star | spider | generalized-net |
    star-subdivision | pendant-complete | pendant-cycle | uniform-net.
    """

    family: str
    params: tuple[int, ...] = field(default=())

    def __str__(self) -> str:
        return f"{self.family}({','.join(map(str, self.params))})"


# CLI-friendly aliases for the four extremal families and common names.
FAMILY_ALIASES = {
    "p": "path",
    "c": "cycle",
    "k": "complete",
    "s": "spider",
    "n": "generalized-net",
    "net": "generalized-net",
    "g1": "star-subdivision",
    "g2": "pendant-complete",
    "g3": "uniform-net",
    "g4": "pendant-cycle",
    "kth": "pendant-complete",
}


def path(n: int) -> Graph:
    """Path on n vertices, 0-1-...-(n-1)."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(r: int) -> Graph:
    """Star with r leaves: center 0, leaves 1..r."""
    if r < 1:
        raise ValueError("star needs r >= 1")
    return Graph(r + 1, [(0, i) for i in range(1, r + 1)])


def spider(i: int, j: int, k: int) -> Graph:
    """Three paths of lengths i, j, k sharing one endpoint (vertex 0).

    Legs are laid out in order: 1..i, then i+1..i+j, then i+j+1..i+j+k.
    """
    if min(i, j, k) < 1:
        raise ValueError("spider legs must have length >= 1")
    edges = []
    nxt = 1
    for leg in (i, j, k):
        prev = 0
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


def generalized_net(i: int, j: int, k: int) -> Graph:
    """Triangle 0,1,2 with a path of length i, j, k hanging off each corner."""
    if min(i, j, k) < 1:
        raise ValueError("net legs must have length >= 1")
    edges = [(0, 1), (1, 2), (0, 2)]
    nxt = 3
    for corner, leg in zip((0, 1, 2), (i, j, k)):
        prev = corner
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


def star_subdivision(t: int) -> Graph:
    """Subdivided star with t arms: center 0, midpoints 1..t, leaves t+1..2t."""
    if t < 2:
        raise ValueError("star subdivision needs t >= 2")
    edges = [(0, m) for m in range(1, t + 1)]
    edges += [(m, t + m) for m in range(1, t + 1)]
    return Graph(2 * t + 1, edges)


def pendant_complete(t: int) -> Graph:
    """Complete graph on 0..t-1 with pendant t+i attached to clique vertex i."""
    if t < 2:
        raise ValueError("pendant-complete needs t >= 2")
    edges = [(i, j) for i in range(t) for j in range(i + 1, t)]
    edges += [(i, t + i) for i in range(t)]
    return Graph(2 * t, edges)


def pendant_cycle(t: int) -> Graph:
    """Cycle on 0..t-1 with pendant t+i attached to cycle vertex i."""
    if t < 3:
        raise ValueError("pendant-cycle needs t >= 3")
    edges = [(i, (i + 1) % t) for i in range(t)]
    edges += [(i, t + i) for i in range(t)]
    return Graph(2 * t, edges)


def uniform_net(t: int) -> Graph:
    """Generalized net with all three legs of length t-1."""
    if t < 2:
        raise ValueError("uniform net needs t >= 2")
    return generalized_net(t - 1, t - 1, t - 1)


_BUILDERS = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "star": (star, 1),
    "spider": (spider, 3),
    "generalized-net": (generalized_net, 3),
    "star-subdivision": (star_subdivision, 1),
    "pendant-complete": (pendant_complete, 1),
    "pendant-cycle": (pendant_cycle, 1),
    "uniform-net": (uniform_net, 1),
}


def canonical_family(name: str) -> str:
    key = name.strip().lower()
    key = FAMILY_ALIASES.get(key, key)
    if key not in _BUILDERS:
        raise ValueError(f"unknown family {name!r}")
    return key


def generate(spec: FamilySpec) -> Graph:
    """Build the graph described by ``spec`` with its fixed labeling."""
    family = canonical_family(spec.family)
    builder, arity = _BUILDERS[family]
    if len(spec.params) != arity:
        raise ValueError(
            f"family {family!r} takes {arity} parameter(s), got {spec.params}"
        )
    return builder(*spec.params)


# Expected (vertex count, diameter) of the four extremal families, used
# for cross-checking generated instances.
def family_expectations(spec: FamilySpec) -> tuple[int, int]:
    family = canonical_family(spec.family)
    if len(spec.params) != 1:
        raise ValueError(f"expectations need a single parameter, got {spec.params}")
    t = spec.params[0]
    if family == "star-subdivision":
        if t < 2:
            raise ValueError("star-subdivision needs t >= 2")
        return 2 * t + 1, 4
    if family == "pendant-complete":
        if t < 2:
            raise ValueError("pendant-complete needs t >= 2")
        return 2 * t, 3
    if family == "uniform-net":
        if t < 2:
            raise ValueError("uniform-net needs t >= 2")
        return 3 * t, 2 * t - 1
    if family == "pendant-cycle":
        if t < 3:
            raise ValueError("pendant-cycle needs t >= 3")
        return 2 * t, t // 2 + 2
    raise ValueError(f"no expectations recorded for family {family!r}")


def parse_family_name(text: str) -> Graph:
    """Parse compact family names like P5, C9, K7, K1,3, S1,2,2, N2,1,1, N.

    Used by the CLI anywhere a pattern can be given by name instead of
    graph6. ``N`` alone is the net (triangle with three pendant edges);
    ``K1,r`` is the star with r leaves.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty family name")
    head = s[0].upper()
    rest = s[1:]
    if head == "N" and not rest:
        return generalized_net(1, 1, 1)
    if head in "SN":
        parts = [p for p in rest.replace("_", ",").split(",") if p]
        if len(parts) != 3:
            raise ValueError(f"{head} takes three leg lengths, e.g. {head}1,2,2")
        i, j, k = map(int, parts)
        return spider(i, j, k) if head == "S" else generalized_net(i, j, k)
    if head == "K" and rest.startswith("1,"):
        return star(int(rest[2:]))
    if head in "PCK" and rest.isdigit():
        n = int(rest)
        return {"P": path, "C": cycle, "K": complete}[head](n)
    if head == "G" and len(rest) >= 2 and rest[0] in "1234":
        # G1t4 style: extremal family index followed by 't' and the parameter
        idx = rest[0]
        param = rest[1:].lstrip("tT^")
        if param.isdigit():
            spec = FamilySpec(f"g{idx}", (int(param),))
            return generate(spec)
    raise ValueError(f"cannot parse family name {text!r}")
