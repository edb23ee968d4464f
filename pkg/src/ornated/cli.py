"""Command-line interface: ``ornated <subcommand> ...``.

Exit status is 0 on success, 1 on domain errors (a matrix that is not
ornated, bounds over budget, invalid sizes, a failed law) and 2 on usage
errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .formats import graph_to_dot, graph_to_json, load_graph
from .graph import build, build_generalized
from .kyle import degree_sequence, kyle, kyle_order
from .lab import (
    DEFAULT_SCAN_BUDGET,
    DEFAULT_SEARCH_BUDGET,
    ResourceError,
    scan_necessity,
    search_sufficiency,
)
from .laws import check_laws
from .ostring import OrderedString
from .ratanang import NotOrnated, recover


def _ordered_string(text: str) -> OrderedString:
    try:
        return OrderedString.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(g, fmt: str, collapse: bool = False) -> str:
    if fmt == "dot":
        return graph_to_dot(g, collapse=collapse)
    if fmt == "csv":
        raise ValueError("csv output is only available for degree tables")
    return graph_to_json(g) + "\n"


def cmd_build(args):
    _emit(_render(build(args.n, args.string), args.format, args.collapse), args.output)


def cmd_kyle(args):
    if args.format == "csv":
        text = degree_sequence(kyle_order(args.string), args.string).to_csv()
    else:
        text = _render(kyle(args.string), args.format, args.collapse)
    _emit(text, args.output)


def cmd_degrees(args):
    n = args.n if args.n is not None else kyle_order(args.string)
    profile = degree_sequence(n, args.string)
    if args.format == "csv":
        text = profile.to_csv()
    else:
        text = json.dumps({
            "n": profile.n,
            "string": list(profile.string.entries),
            "totals": list(profile.totals),
            "per_entry": [list(r) for r in profile.per_entry],
            "delta_min": profile.delta_min,
            "delta_max": profile.delta_max,
            "cluster": list(profile.cluster),
        }) + "\n"
    _emit(text, args.output)


def cmd_recover(args):
    result = recover(load_graph(args.input).arcs)
    _emit(json.dumps(result.to_dict()) + "\n", args.output)


def cmd_laws(args):
    results = check_laws(args.n, args.string)
    lines = [f"{name}: {'pass' if ok else 'FAIL'}" for name, ok in results.items()]
    _emit("\n".join(lines) + "\n", args.output)
    return 0 if all(results.values()) else 1


def cmd_export(args):
    if args.input:
        g = load_graph(args.input)
    elif args.string is not None:
        n = args.n if args.n is not None else kyle_order(args.string)
        g = build_generalized(n, [args.string])
    else:
        raise argparse.ArgumentTypeError("export needs --input or --string")
    _emit(_render(g, args.format, args.collapse), args.output)


def cmd_scan(args):
    if args.mode == "necessity":
        budget = DEFAULT_SCAN_BUDGET if args.budget is None else args.budget
        scan = scan_necessity(args.max_k, args.max_l, workers=args.workers, budget=budget)
        lines = [
            json.dumps({"string": list(s.entries), "report": r.to_dict()})
            for s, r in scan.rows
        ]
        summary = scan.summary()
    else:
        budget = DEFAULT_SEARCH_BUDGET if args.budget is None else args.budget
        found = search_sufficiency(args.m, args.max_mult, workers=args.workers, budget=budget)
        lines = [json.dumps(c.to_dict()) for c in found]
        summary = {
            "mode": "sufficiency",
            "m": args.m,
            "max_mult": args.max_mult,
            "candidates": len(found),
            "by_kind": {
                kind: sum(1 for c in found if c.kind == kind)
                for kind in ("kyle_fails_condition", "conditions_hold_not_kyle")
            },
        }
    lines.append(json.dumps({"summary": summary}))
    _emit("\n".join(lines) + "\n", args.output)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ornated", description="Ornated directed multigraphs")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p, need_n=True, formats=("json", "dot")):
        p.add_argument("--string", type=_ordered_string, required=True,
                       help="comma-separated entries, e.g. 1,3,5,1,2,8")
        if need_n:
            p.add_argument("--n", type=int, required=True)
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--output")

    p = sub.add_parser("build", help="build O_n(s) and print it")
    graph_args(p)
    p.add_argument("--collapse", action="store_true")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("kyle", help="build the Kyle graph of s (n = 2k + 1)")
    graph_args(p, need_n=False, formats=("json", "dot", "csv"))
    p.add_argument("--collapse", action="store_true")
    p.set_defaults(func=cmd_kyle)

    p = sub.add_parser("degrees", help="degree table with per-entry contributions")
    p.add_argument("--string", type=_ordered_string, required=True)
    p.add_argument("--n", type=int, help="defaults to the Kyle order 2k + 1")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output")
    p.set_defaults(func=cmd_degrees)

    p = sub.add_parser("recover", help="recover the defining string from a graph JSON file")
    p.add_argument("--input", required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("laws", help="check the construction laws for s on n vertices")
    p.add_argument("--string", type=_ordered_string, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_laws)

    p = sub.add_parser("export", help="write a graph as DOT or JSON")
    p.add_argument("--input")
    p.add_argument("--string", type=_ordered_string)
    p.add_argument("--n", type=int)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--collapse", action="store_true", help="one labelled edge per vertex pair")
    p.add_argument("--output")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("scan", help="conjecture lab scans (JSON lines + summary)")
    p.add_argument("mode", choices=("necessity", "sufficiency"))
    p.add_argument("--max-k", type=int, default=3)
    p.add_argument("--max-l", type=int, default=2)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--max-mult", type=int, default=1)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int)
    p.add_argument("--output")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        status = args.func(args)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except (NotOrnated, ResourceError, ValueError, IndexError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
