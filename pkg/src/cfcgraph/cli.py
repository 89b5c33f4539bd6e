"""Command line interface.

Commands: analyze (structure and constructive coloring of a graph file),
exact (exact value with search evidence), tables (exhaustive extremal
tables), construct (sharp witness graphs and colorings), verify-formulas
(cross-check matrix between closed forms and enumeration).

Exit codes: 0 success, 1 usage error or failed checks, 2 invalid or
disconnected input, 3 path enumeration cap exceeded, 4 search budget
exhausted.  Stdout is deterministic for fixed inputs; file artifacts are
reported on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .census import MAX_CENSUS_N, generate_connected_graphs
from .coloring import (
    bridge_block_coloring,
    format_coloring,
    is_conflict_free_connected,
    ruler_path_coloring,
    to_dot,
)
from .exact import DEFAULT_BUDGET, SearchBudgetExceeded, cfc_exact, cfc_lower_bound
from .extremal import (
    bridge_extremal_graph,
    ceil_log2,
    compare_table_with_formulas,
    compute_extremal_table,
    solved_census,
    star_clique_cfc,
    star_clique_graph,
    table_to_csv,
    table_to_json_dict,
    table_witness_graphs,
)
from .figures import save_census_figure, save_table_figure
from .graphs import (
    DEFAULT_PATH_CAP,
    DisconnectedGraphError,
    GraphFormatError,
    PathCapExceeded,
    block_decomposition,
    find_bridges,
    format_graph,
    load_graph,
    path_graph,
    require_connected,
    save_graph,
)
from .verify import run_all_checks

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_BUDGET = 4


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; this project reserves 2 for bad
    input data, so usage errors exit 1 instead."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> _Parser:
    parser = _Parser(prog="cfcgraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="bridge/block structure and constructive coloring")
    p.add_argument("--input", required=True, help="graph file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="write the constructive coloring to this file")
    p.add_argument("--dot", help="write a DOT rendering with edge colors")
    p.add_argument("--cap", type=int, default=DEFAULT_PATH_CAP,
                   help="abort if any vertex pair has more simple paths than this")

    p = sub.add_parser("exact", help="exact conflict-free connection number")
    p.add_argument("--input", required=True, help="graph file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="search node budget")
    p.add_argument("--out", help="write the optimal coloring to this file")
    p.add_argument("--dot", help="write a DOT rendering with edge colors")
    p.add_argument("--cap", type=int, default=DEFAULT_PATH_CAP)

    p = sub.add_parser("tables", help="exhaustive extremal tables for one order")
    p.add_argument("--n", type=int, required=True, help=f"order, 2..{MAX_CENSUS_N}")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--jobs", type=int, default=1, help="parallel solver processes")
    p.add_argument("--dedup", choices=("on", "off"), default="on",
                   help="off additionally counts labeled graphs, no isomorphism dedup")
    p.add_argument("--out", help="write the report here, plus a .png chart "
                                 "and a _witnesses directory of graph files")

    p = sub.add_parser("construct", help="sharp witness constructions")
    what = p.add_subparsers(dest="what", required=True)

    w = what.add_parser("gk", help="clique with pendant edges, one color above k")
    w.add_argument("--n", type=int, required=True)
    w.add_argument("--k", type=int, required=True)
    w.add_argument("--out", help="write the graph file here")
    w.add_argument("--dot", help="write a colored DOT rendering")

    w = what.add_parser("path-ruler", help="optimal coloring of the n-vertex path")
    w.add_argument("--n", type=int, required=True)
    w.add_argument("--out", help="write the coloring file here")
    w.add_argument("--dot", help="write a colored DOT rendering")

    w = what.add_parser("max-bridges", help="edge-maximal graph with k cut edges")
    w.add_argument("--n", type=int, required=True)
    w.add_argument("--k", type=int, required=True)
    w.add_argument("--out", help="write the graph file here")
    w.add_argument("--dot", help="write a colored DOT rendering")

    p = sub.add_parser("verify-formulas",
                       help="cross-check formulas against exhaustive computation")
    p.add_argument("--n", type=int, default=6, help="check orders 2..n")
    p.add_argument("--seed", type=int, default=0, help="randomized check seed")
    p.add_argument("--samples", type=int, default=25, help="random graphs to solve")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="write the report here, plus a census chart .png")
    return parser


def _write(path: str, content: str) -> None:
    Path(path).write_text(content)
    print(f"wrote {path}", file=sys.stderr)


def cmd_analyze(args) -> int:
    g = load_graph(args.input)
    require_connected(g)
    decomp = block_decomposition(g)
    coloring = bridge_block_coloring(g, verify=False)
    report = is_conflict_free_connected(g, coloring, cap=args.cap)
    if not report.ok:
        print(f"constructive coloring failed at pair {report.failure_pair}",
              file=sys.stderr)
        return EXIT_INPUT
    lb = cfc_lower_bound(g) if g.n >= 2 else 1
    if args.format == "json":
        payload = {
            "schema_version": 1,
            "kind": "analyze",
            "n": g.n,
            "m": g.m,
            "bridges": sorted(decomp.bridges),
            "blocks": [list(b) for b in decomp.blocks],
            "coloring": list(coloring.colors),
            "colors": coloring.k,
            "verified": True,
            "lower_bound": lb,
        }
        print(json.dumps(payload, indent=2))
    else:
        bridges = sorted(decomp.bridges)
        print(f"vertices: {g.n}")
        print(f"edges: {g.m}")
        ids = f" (edge ids: {', '.join(map(str, bridges))})" if bridges else ""
        print(f"cut edges: {len(bridges)}{ids}")
        print(f"blocks: {len(decomp.blocks)}")
        print(f"constructive colors: {coloring.k} (bound max(2, cut edges) = "
              f"{max(2, len(bridges))})")
        print("verified: yes")
        print(f"lower bound: {lb}")
    if args.out:
        _write(args.out, format_coloring(coloring))
    if args.dot:
        _write(args.dot, to_dot(g, coloring))
    return EXIT_OK


def cmd_exact(args) -> int:
    g = load_graph(args.input)
    res = cfc_exact(g, budget=args.budget, path_cap=args.cap)
    ev = res.evidence
    if args.format == "json":
        payload = {
            "schema_version": 1,
            "kind": "exact",
            "n": g.n,
            "m": g.m,
            "value": res.value,
            "lower_bound": res.lower_bound,
            "certificate": list(res.certificate.colors),
            "evidence": {
                "analytic": ev.analytic_bound,
                "exhausted": {str(k): v for k, v in sorted(ev.exhausted.items())},
                "nodes": ev.nodes,
            },
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"value: {res.value}")
        print(f"lower bound: {res.lower_bound}")
        print(f"certificate: {' '.join(map(str, res.certificate.colors))}")
        if ev.analytic_bound is not None:
            print(f"evidence: value meets the analytic bound ({ev.analytic_bound})")
        for k, nodes in sorted(ev.exhausted.items()):
            print(f"evidence: k={k} exhausted after {nodes} search nodes")
        print(f"search nodes: {ev.nodes}")
    if args.out:
        _write(args.out, format_coloring(res.certificate))
    if args.dot:
        _write(args.dot, to_dot(g, res.certificate))
    return EXIT_OK


def _cell(v, missing: str) -> str:
    return str(v) if v is not None else missing


def _table_text(table, labeled: int | None) -> str:
    status = "complete" if table.complete else "PARTIAL, budget ran out"
    lines = [f"extremal table n={table.n} ({table.class_count} classes, {status})"]
    if labeled is not None:
        lines.append(f"labeled connected graphs: {labeled}")
    if not table.rows:
        lines.append(f"no rows: no k satisfies 2 <= k <= {table.n - 1}")
    grid = [["k", "s", "t", "f", "g"]]
    for r in table.rows:
        grid.append([str(r.k), _cell(r.s, "undefined"), _cell(r.t, "undefined"),
                     _cell(r.f, "undefined"), _cell(r.g, "does_not_exist")])
    if table.rows:
        widths = [max(len(row[i]) for row in grid) for i in range(5)]
        for row in grid:
            lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)))
    comparisons = compare_table_with_formulas(table)
    for c in comparisons:
        lines.append(f"{c.name} k={c.k}: {c.status} ({c.detail})")
    fails = sum(1 for c in comparisons if c.status == "FAIL")
    lines.append("all formula comparisons PASS" if fails == 0
                 else f"formula comparisons: {fails} FAIL")
    return "\n".join(lines) + "\n"


def cmd_tables(args) -> int:
    if not 2 <= args.n <= MAX_CENSUS_N:
        print(f"tables need 2 <= n <= {MAX_CENSUS_N}", file=sys.stderr)
        return EXIT_USAGE
    if args.n >= 8:
        print(f"n={args.n}: the census has thousands of classes; "
              "this can take a long time", file=sys.stderr)
    labeled = None
    if args.dedup == "off":
        labeled = sum(1 for _ in generate_connected_graphs(args.n, dedup=False))
    table = compute_extremal_table(args.n, args.budget, args.jobs)
    if args.format == "csv":
        out_text = table_to_csv(table)
    elif args.format == "json":
        payload = table_to_json_dict(table)
        if labeled is not None:
            payload["labeled_connected"] = labeled
        out_text = json.dumps(payload, indent=2) + "\n"
    else:
        out_text = _table_text(table, labeled)
    sys.stdout.write(out_text)
    if args.out:
        _write(args.out, out_text)
        save_table_figure(table, str(Path(args.out).with_suffix(".png")))
        print(f"wrote {Path(args.out).with_suffix('.png')}", file=sys.stderr)
        wit_dir = Path(args.out).with_suffix("")
        wit_dir = wit_dir.with_name(wit_dir.name + "_witnesses")
        wit_dir.mkdir(parents=True, exist_ok=True)
        for key, graph in table_witness_graphs(table).items():
            save_graph(graph, wit_dir / f"graph_{key}.txt")
        print(f"wrote witness graphs to {wit_dir}", file=sys.stderr)
    return EXIT_OK if table.complete else EXIT_BUDGET


def cmd_construct(args) -> int:
    try:
        if args.what == "gk":
            g = star_clique_graph(args.n, args.k)
            value = star_clique_cfc(args.n, args.k)
            clique = args.n - args.k - 1
            header = (f"# clique on {clique} vertices with {args.k + 1} pendant "
                      f"edges at vertex 0\n"
                      f"# conflict-free connection number: {value}\n")
            body = header + format_graph(g)
            coloring = bridge_block_coloring(g, verify=False)
        elif args.what == "max-bridges":
            g = bridge_extremal_graph(args.n, args.k)
            actual = len(find_bridges(g))
            header = (f"# clique on {args.n - args.k} vertices with {args.k} "
                      f"pendant edges at vertex 0\n"
                      f"# cut edges: {actual}\n")
            body = header + format_graph(g)
            coloring = bridge_block_coloring(g, verify=False)
        else:  # path-ruler
            g = path_graph(args.n)
            coloring = ruler_path_coloring(args.n)
            header = (f"# ruler coloring of the {args.n}-vertex path, "
                      f"{ceil_log2(args.n)} colors\n")
            body = header + format_coloring(coloring)
    except ValueError as exc:
        print(f"cfcgraph construct: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(body)
    if args.out:
        _write(args.out, body)
    if args.dot:
        _write(args.dot, to_dot(g, coloring))
    return EXIT_OK


def cmd_verify_formulas(args) -> int:
    if not 2 <= args.n <= MAX_CENSUS_N:
        print(f"verification needs 2 <= n <= {MAX_CENSUS_N}", file=sys.stderr)
        return EXIT_USAGE
    checks = run_all_checks(args.n, seed=args.seed, budget=args.budget,
                            jobs=args.jobs, random_count=args.samples)
    failed = [c for c in checks if not c.passed]
    if args.format == "json":
        payload = {
            "schema_version": 1,
            "kind": "verify",
            "max_n": args.n,
            "seed": args.seed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in checks
            ],
            "failed": len(failed),
        }
        out_text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [f"{c.name}: {'PASS' if c.passed else 'FAIL'} ({c.detail})"
                 for c in checks]
        lines.append(f"all {len(checks)} checks passed" if not failed
                     else f"{len(failed)} of {len(checks)} checks failed")
        out_text = "\n".join(lines) + "\n"
    sys.stdout.write(out_text)
    if args.out:
        _write(args.out, out_text)
        fig_path = str(Path(args.out).with_suffix(".png"))
        save_census_figure(args.n, solved_census(args.n, args.budget), fig_path)
        print(f"wrote {fig_path}", file=sys.stderr)
    return EXIT_OK if not failed else EXIT_USAGE


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "analyze": cmd_analyze,
        "exact": cmd_exact,
        "tables": cmd_tables,
        "construct": cmd_construct,
        "verify-formulas": cmd_verify_formulas,
    }
    try:
        return handlers[args.command](args)
    except (GraphFormatError, DisconnectedGraphError) as exc:
        print(f"cfcgraph: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"cfcgraph: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"cfcgraph: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PathCapExceeded as exc:
        print(f"cfcgraph: {exc}", file=sys.stderr)
        return EXIT_CAP
    except SearchBudgetExceeded as exc:
        print(f"cfcgraph: {exc}; value unknown", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
