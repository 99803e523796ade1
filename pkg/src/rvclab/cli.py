"""Command-line front end.

Subcommands: gen, rvc, verify, free, classify-pair, color, lemma-check,
survey, dot. Machine output is line-oriented: one JSON object or CSV row
per input graph. Exit codes: 0 success, 2 usage error, 3 input format
error, 4 precondition violation (disconnected input, graph outside the
requested family, mismatched coloring).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from functools import partial

from . import families
from .colorers import (
    FamilyPreconditionError,
    color_p4_free,
    color_p5_kth_free,
    color_s122_n_free,
)
from .detect import classify_pair, find_induced, is_family_free
from .graph import (
    DisconnectedGraphError,
    Graph,
    Graph6Error,
    diameter_and_path,
    is_connected,
    parse_graph6,
    serialize_graph6,
)
from .rvc import (
    ColoringMismatchError,
    SearchBudgetError,
    VertexColoring,
    is_rainbow_vertex_connected,
    rvc_exact,
)
from .sampler import sample_free_graphs
from .structure import check_lemma1, classify_against_path

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FORMAT = 3
EXIT_PRECONDITION = 4

# fill colors cycled by color id when rendering DOT output
DOT_PALETTE = (
    "#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3",
    "#937860", "#da8bc3", "#8c8c8c", "#ccb974", "#64b5cd",
    "#5975a4", "#b55d60", "#5f9e6e", "#857aab",
)

SURVEY_COLUMNS = [
    "graph6", "n", "diameter", "rvc_lower", "rvc_upper", "rvc_exact",
    "free_p4", "free_p5_k4h", "free_s122_n", "palette", "case_trace",
]


def _read_lines(source: str) -> list[str]:
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source, "r", encoding="ascii") as fh:
                text = fh.read()
        except OSError as exc:
            raise Graph6Error(f"cannot read {source}: {exc}") from exc
    return [line for line in text.splitlines() if line.strip()]


def _read_graphs(source: str) -> list[Graph]:
    return [parse_graph6(line) for line in _read_lines(source)]


def _parse_pattern(text: str) -> Graph:
    """A pattern by family name (P5, C6, K1,3, S1,2,2, N, g2t4) or graph6."""
    try:
        return families.parse_family_name(text)
    except ValueError:
        pass
    return parse_graph6(text)


def _parse_coloring(spec: str, n: int) -> VertexColoring:
    """Coloring from a JSON file ({"n":..,"k":..,"colors":[..]}) or a
    comma-separated color list."""
    if os.path.exists(spec):
        try:
            with open(spec, "r", encoding="ascii") as fh:
                data = json.load(fh)
            colors = tuple(int(c) for c in data["colors"])
            k = int(data["k"])
            if int(data.get("n", len(colors))) != len(colors):
                raise Graph6Error("coloring file: n does not match colors length")
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise Graph6Error(f"bad coloring file {spec}: {exc}") from exc
    else:
        try:
            colors = tuple(int(c) for c in spec.split(","))
        except ValueError as exc:
            raise Graph6Error(f"bad coloring list {spec!r}: {exc}") from exc
        k = max(colors) + 1 if colors else 1
    if len(colors) != n:
        raise ColoringMismatchError(
            f"coloring covers {len(colors)} vertices, graph has {n}"
        )
    try:
        return VertexColoring(colors, k)
    except ValueError as exc:
        raise Graph6Error(f"bad coloring: {exc}") from exc


def _coloring_json(coloring: VertexColoring) -> dict:
    return {"n": len(coloring.colors), "k": coloring.k, "colors": list(coloring.colors)}


def _emit(obj: dict) -> None:
    print(json.dumps(obj, separators=(", ", ": ")))


# -- subcommands -----------------------------------------------------------


def cmd_gen(args) -> int:
    family = families.canonical_family(args.family)
    _, arity = families._BUILDERS[family]
    if arity == 3:
        if args.count != 1:
            raise Graph6Error("--count > 1 is only supported for one-parameter families")
        if None in (args.i, args.j, args.k):
            raise Graph6Error(f"family {family} needs --i --j --k")
        params: tuple[int, ...] = (args.i, args.j, args.k)
        print(serialize_graph6(families.generate(families.FamilySpec(family, params))))
        return EXIT_OK
    base = next(p for p in (args.n, args.r, args.t) if p is not None) if any(
        p is not None for p in (args.n, args.r, args.t)
    ) else None
    if base is None:
        raise Graph6Error(f"family {family} needs --n, --r or --t")
    for value in range(base, base + args.count):
        print(serialize_graph6(families.generate(families.FamilySpec(family, (value,)))))
    return EXIT_OK


def cmd_rvc(args) -> int:
    for g in _read_graphs(args.input):
        if not is_connected(g):
            raise DisconnectedGraphError("rvc is undefined for disconnected graphs")
        result = rvc_exact(g, max_palette=args.max_palette, deep=args.deep)
        _emit({
            "value": result.value,
            "exhaustive": result.exhaustive,
            "witness": _coloring_json(result.witness) if result.witness else None,
        })
    return EXIT_OK


def cmd_verify(args) -> int:
    graphs = _read_graphs(args.input)
    if not graphs:
        raise Graph6Error("no input graph")
    g = graphs[0]
    coloring = _parse_coloring(args.coloring, g.n)
    report = is_rainbow_vertex_connected(g, coloring)
    _emit({
        "connected": report.connected,
        "failing_pair": list(report.failing_pair) if report.failing_pair else None,
    })
    return EXIT_OK


def cmd_free(args) -> int:
    patterns = [(name, _parse_pattern(name)) for name in args.pattern]
    for g in _read_graphs(args.input):
        hit_name = None
        embedding = None
        for name, q in patterns:
            emb = find_induced(q, g)
            if emb is not None:
                hit_name = name
                embedding = [emb[i] for i in range(q.n)]
                break
        _emit({
            "free": hit_name is None,
            "pattern": hit_name,
            "embedding": embedding,
        })
    return EXIT_OK


def cmd_classify_pair(args) -> int:
    x = _parse_pattern(args.x)
    y = _parse_pattern(args.y)
    verdict = classify_pair(x, y)
    _emit({
        "verdict": verdict.verdict,
        "clause": verdict.clause,
        "t": verdict.witness_t,
        "swapped": verdict.swapped,
    })
    return EXIT_OK


def cmd_color(args) -> int:
    for g in _read_graphs(args.input):
        if args.family == "p4":
            result = color_p4_free(g)
        elif args.family == "p5-kth":
            result = color_p5_kth_free(g, args.t)
        else:
            result = color_s122_n_free(g)
        _emit({
            "palette": result.palette,
            "bound_claimed": result.bound_claimed,
            "case_trace": result.case_trace,
            "verified": result.verified,
            "escalation": result.escalation,
            "coloring": _coloring_json(result.coloring),
        })
    return EXIT_OK


def cmd_lemma_check(args) -> int:
    for g in _read_graphs(args.input):
        if not is_connected(g):
            raise DisconnectedGraphError("lemma-check needs a connected graph")
        d, path = diameter_and_path(g)
        if d < 4:
            _emit({"applicable": False, "path": list(path), "checks": {}, "all_passed": None})
            continue
        part = classify_against_path(g, path)
        report = check_lemma1(g, part)
        _emit({
            "applicable": True,
            "path": list(path),
            "checks": {
                name: {"passed": ok, "witness": list(w) if w else None}
                for name, (ok, w) in report.checks.items()
            },
            "all_passed": report.all_passed,
        })
    return EXIT_OK


def _survey_row(line: str, exact_max: int) -> list | None:
    g = parse_graph6(line)
    if not is_connected(g):
        return None
    d, _ = diameter_and_path(g)
    p4 = is_family_free(g, [families.path(4)])
    p5k = is_family_free(g, [families.path(5), families.pendant_complete(4)])
    sn = is_family_free(
        g, [families.spider(1, 2, 2), families.generalized_net(1, 1, 1)]
    )
    palette = ""
    trace = ""
    upper_from_colorer = None
    if p4:
        cc = color_p4_free(g)
    elif sn:
        cc = color_s122_n_free(g)
    elif p5k:
        cc = color_p5_kth_free(g, 4)
    else:
        cc = None
    if cc is not None:
        palette = cc.palette
        trace = cc.case_trace
        if cc.verified:
            upper_from_colorer = cc.palette
    if g.is_complete():
        lower, upper, exact = 0, 0, True
    elif g.n <= exact_max:
        result = rvc_exact(g)
        lower = upper = result.value
        exact = True
    else:
        lower = max(1, d - 1)
        interior = sum(1 for v in range(g.n) if g.degree(v) >= 2)
        upper = min(interior, g.n - 2)
        if upper_from_colorer is not None:
            upper = min(upper, upper_from_colorer)
        exact = False
    return [
        serialize_graph6(g), g.n, d, lower, upper,
        str(exact).lower(), str(p4).lower(), str(p5k).lower(), str(sn).lower(),
        palette, trace,
    ]


def cmd_survey(args) -> int:
    if args.random:
        if args.family_filter is None:
            raise Graph6Error("--random needs --family-filter")
        graphs = sample_free_graphs(
            args.family_filter, args.random,
            n_min=args.n_min, n_max=args.n_max, seed=args.seed,
        )
        lines = [serialize_graph6(g) for g in graphs]
    else:
        if args.input is None:
            raise Graph6Error("survey needs an input file or --random")
        lines = _read_lines(args.input)
    threads = max(1, int(os.environ.get("RVCLAB_THREADS", "1")))
    worker = partial(_survey_row, exact_max=args.exact_max)
    if threads > 1 and len(lines) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(worker, lines))
    else:
        rows = [worker(line) for line in lines]
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(SURVEY_COLUMNS)
    skipped = 0
    for row in rows:
        if row is None:
            skipped += 1
        else:
            writer.writerow(row)
    if skipped:
        print(f"skipped {skipped} disconnected graph(s)", file=sys.stderr)
    return EXIT_OK


def cmd_dot(args) -> int:
    graphs = _read_graphs(args.input)
    if not graphs:
        raise Graph6Error("no input graph")
    g = graphs[0]
    coloring = _parse_coloring(args.coloring, g.n) if args.coloring else None
    lines = ["graph g {", "  node [style=filled];"]
    for v in range(g.n):
        if coloring is None:
            lines.append(f'  {v} [label="{v}"];')
        else:
            c = coloring.colors[v]
            fill = DOT_PALETTE[c % len(DOT_PALETTE)]
            lines.append(f'  {v} [label="{v}:{c}", fillcolor="{fill}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    print("\n".join(lines))
    return EXIT_OK


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rvclab",
        description="Rainbow vertex-connection toolbox: generate, color, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit family graphs as graph6 lines")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--count", type=int, default=1,
                   help="emit this many instances with increasing parameter")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("rvc", help="exact rainbow vertex-connection number")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--deep", action="store_true",
                   help="allow exhaustive search past 16 vertices")
    p.add_argument("--max-palette", type=int, default=None)
    p.set_defaults(func=cmd_rvc)

    p = sub.add_parser("verify", help="check a coloring for rainbow connectivity")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--coloring", required=True,
                   help="JSON coloring file or comma-separated color list")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("free", help="test induced-subgraph freeness")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--pattern", action="append", required=True,
                   help="family name or graph6 (repeatable)")
    p.set_defaults(func=cmd_free)

    p = sub.add_parser("classify-pair", help="bounded/unbounded verdict for a forbidden pair")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(func=cmd_classify_pair)

    p = sub.add_parser("color", help="constructive coloring for a free family")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--family", required=True, choices=["p4", "p5-kth", "s122-n"])
    p.add_argument("--t", type=int, default=4,
                   help="pendant-complete parameter for p5-kth")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("lemma-check", help="diameter-path partition property report")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=cmd_lemma_check)

    p = sub.add_parser("survey", help="CSV survey of graph6 inputs")
    p.add_argument("input", nargs="?", default=None)
    p.add_argument("--exact-max", type=int, default=10,
                   help="compute rvc exactly up to this many vertices")
    p.add_argument("--random", type=int, default=None,
                   help="survey this many sampled family members instead of a file")
    p.add_argument("--family-filter", choices=["p5-kth", "s122-n"], default=None)
    p.add_argument("--n-min", type=int, default=9)
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("dot", help="DOT rendering with optional coloring")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--coloring", default=None)
    p.set_defaults(func=cmd_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Graph6Error as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except (
        DisconnectedGraphError,
        FamilyPreconditionError,
        ColoringMismatchError,
        SearchBudgetError,
    ) as exc:
        print(f"precondition error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
