"""Command-line interface: every capability behind one JSON-reporting tool.

Reports are printed to stdout as a single JSON document with keys in a fixed
order; integer values larger than 2**53 are rendered as decimal strings so
consumers using binary floating point cannot lose digits.  Diagnostics go to
stderr as one line.  Exit codes: 0 success, 1 usage error, 2 parse error,
3 infeasible parameters, 4 size limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Any

from .constructions import PartitionPlan, build_component_graph, component_plan
from .constructions import max_dominating_pairs, max_total_dominating_pairs
from .constructions import predicted_count
from .domination import (
    count_sets_with_witnesses,
    domination_number,
    total_domination_number,
)
from .errors import (
    GraphParseError,
    InfeasibleOrderError,
    MixedOrderError,
    SizeLimitError,
    UndefinedTotalDominationError,
)
from .graph6 import iter_graph6, parse_edge_list, parse_graph6, write_edge_list
from .graph6 import write_graph6
from .graphs import Graph
from .partitions import optimize_allocation
from .scanning import efficiency_ratio, extremal_scan, scan_labeled

_KEY_ORDER = (
    "n",
    "m",
    "mode",
    "gamma",
    "count",
    "witnesses",
    "plan",
    "predicted",
    "prescribed_plan",
    "graph6",
    "witness",
    "graphs_scanned",
    "ratio",
    "asymptote",
    "elapsed_ms",
)

_JSON_SAFE_MAX = 2**53


def _num(value: int) -> int | str:
    """Integers beyond 2**53 become decimal strings (lossless in JSON)."""
    return value if -_JSON_SAFE_MAX <= value <= _JSON_SAFE_MAX else str(value)


def _fraction(value: Fraction) -> dict[str, int | str]:
    return {"num": _num(value.numerator), "den": _num(value.denominator)}


def _plan_json(plan: PartitionPlan) -> list[dict[str, Any]]:
    return [
        {"kind": c.kind, "size": c.size, "count": _num(c.count)}
        for c in plan.components
    ]


def _mode(args: argparse.Namespace) -> str:
    return "total" if getattr(args, "total", False) else "dominating"


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as handle:
        return handle.read()


def _load_graph(args: argparse.Namespace) -> Graph:
    text = _read_text(args.infile)
    if args.format == "edges":
        return parse_edge_list(text)
    for line in text.splitlines():
        if line.strip():
            return parse_graph6(line.strip(), strict=not args.lenient)
    raise GraphParseError("no graph6 record found in input")


def _cmd_gamma(args: argparse.Namespace) -> dict[str, Any]:
    graph = _load_graph(args)
    mode = _mode(args)
    if mode == "total":
        gamma = total_domination_number(graph)
    else:
        gamma = domination_number(graph)
    return {"n": graph.n, "m": graph.m, "mode": mode, "gamma": gamma}


def _cmd_count(args: argparse.Namespace) -> dict[str, Any]:
    graph = _load_graph(args)
    mode = _mode(args)
    report: dict[str, Any] = {"n": graph.n, "m": graph.m, "mode": mode}
    if args.size is None:
        if mode == "total":
            size = total_domination_number(graph)
        else:
            size = domination_number(graph)
        report["gamma"] = size
    else:
        size = args.size
    cap = args.witness_cap if args.witness_cap is not None else 0
    count, witnesses = count_sets_with_witnesses(graph, size, mode, cap)
    report["count"] = _num(count)
    if args.witness_cap is not None:
        report["witnesses"] = [list(w.vertices()) for w in witnesses]
    return report


def _cmd_construct(args: argparse.Namespace) -> dict[str, Any]:
    graph, plan = build_component_graph(args.n, args.gamma)
    report: dict[str, Any] = {
        "n": graph.n,
        "m": graph.m,
        "gamma": args.gamma,
        "plan": _plan_json(plan),
        "predicted": _num(predicted_count(plan)),
    }
    if args.out:
        payload = (
            write_graph6(graph) + "\n"
            if args.format == "g6"
            else write_edge_list(graph)
        )
        with open(args.out, "w", encoding="ascii") as handle:
            handle.write(payload)
    else:
        report["graph6"] = write_graph6(graph)
    return report


def _cmd_formula(args: argparse.Namespace) -> dict[str, Any]:
    n, x = args.n, args.gamma
    mode = _mode(args)
    if mode == "total":
        if x != 2:
            raise InfeasibleOrderError(
                "total-domination closed forms exist only for gamma = 2"
            )
        count = max_total_dominating_pairs(n)
    elif x == 1:
        if n < 1:
            raise InfeasibleOrderError("gamma = 1 needs n >= 1")
        count = n
    elif x == 2:
        count = max_dominating_pairs(n)
    else:
        count = predicted_count(component_plan(n, x))
    return {"n": n, "mode": mode, "gamma": x, "count": _num(count)}


def _cmd_optimize(args: argparse.Namespace) -> dict[str, Any]:
    optimal = optimize_allocation(args.n, args.gamma)
    prescribed = component_plan(args.n, args.gamma)
    return {
        "n": args.n,
        "gamma": args.gamma,
        "count": _num(optimal.total_count),
        "plan": _plan_json(optimal),
        "predicted": _num(prescribed.total_count),
        "prescribed_plan": _plan_json(prescribed),
    }


def _cmd_scan(args: argparse.Namespace) -> dict[str, Any]:
    mode = _mode(args)
    if args.corpus:
        with open(args.corpus, "r", encoding="ascii") as handle:
            record = extremal_scan(
                iter_graph6(handle, strict=not args.lenient), mode
            )
        if args.n is not None and record.n != args.n:
            raise MixedOrderError(
                f"corpus has order {record.n}, --n {args.n} was requested"
            )
    else:
        if args.n is None:
            raise InfeasibleOrderError("scan needs --n or --corpus")
        record = scan_labeled(args.n, mode)
    report: dict[str, Any] = {
        "n": record.n,
        "mode": record.mode,
        "gamma": record.target_gamma,
        "count": _num(record.max_count),
        "graphs_scanned": _num(record.graphs_scanned),
    }
    if record.witness is not None:
        report["witness"] = record.witness
    return report


def _cmd_efficiency(args: argparse.Namespace) -> dict[str, Any]:
    result = efficiency_ratio(args.n, args.gamma)
    return {
        "n": args.n,
        "gamma": args.gamma,
        "ratio": _fraction(result.ratio),
        "asymptote": _fraction(result.ratio_limit),
    }


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; this tool reserves 2 for
    parse errors and uses 1 for usage."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_input_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--in", dest="infile", required=True, metavar="FILE",
                     help="input graph file ('-' for stdin)")
    sub.add_argument("--format", choices=("g6", "edges"), default="g6",
                     help="input format (default: g6)")
    sub.add_argument("--lenient", action="store_true",
                     help="accept nonzero graph6 padding bits with a warning")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="domcount",
                     description="Exact domination-set counting and "
                                 "extremal construction toolkit")
    commands = parser.add_subparsers(dest="command", required=True,
                                     parser_class=_Parser)

    sub = commands.add_parser("gamma", help="(total) domination number")
    _add_input_options(sub)
    sub.add_argument("--total", action="store_true")
    sub.set_defaults(handler=_cmd_gamma)

    sub = commands.add_parser("count", help="exact count of (total) dominating sets")
    _add_input_options(sub)
    sub.add_argument("--size", type=int, default=None, metavar="K",
                     help="set size to count (default: the minimum size)")
    sub.add_argument("--total", action="store_true")
    sub.add_argument("--witness-cap", type=int, default=None, metavar="M",
                     help="include up to M witness sets in the report")
    sub.set_defaults(handler=_cmd_count)

    sub = commands.add_parser("construct",
                              help="build the union construction for (n, gamma)")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--gamma", type=int, required=True)
    sub.add_argument("--out", metavar="FILE",
                     help="write the graph here instead of inlining graph6")
    sub.add_argument("--format", choices=("g6", "edges"), default="g6",
                     help="output format for --out (default: g6)")
    sub.set_defaults(handler=_cmd_construct)

    sub = commands.add_parser("formula",
                              help="closed-form maximum counts (gamma <= 2) or "
                                   "the construction's product count (gamma >= 3)")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--gamma", type=int, required=True)
    sub.add_argument("--total", action="store_true")
    sub.set_defaults(handler=_cmd_formula)

    sub = commands.add_parser("optimize",
                              help="exact-optimal component allocation vs the "
                                   "prescribed one")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--gamma", type=int, required=True)
    sub.set_defaults(handler=_cmd_optimize)

    sub = commands.add_parser("scan",
                              help="exhaustive extremal scan (built-in labeled "
                                   "enumeration or a graph6 corpus)")
    sub.add_argument("--n", type=int, default=None)
    sub.add_argument("--total", action="store_true")
    sub.add_argument("--corpus", metavar="FILE",
                     help="graph6 file, one record per line")
    sub.add_argument("--lenient", action="store_true")
    sub.set_defaults(handler=_cmd_scan)

    sub = commands.add_parser("efficiency",
                              help="exact dominating fraction of x-subsets and "
                                   "its fixed-x limit")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--gamma", type=int, required=True)
    sub.set_defaults(handler=_cmd_efficiency)

    return parser


def run_cli(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        report = args.handler(args)
    except (GraphParseError, MixedOrderError) as exc:
        print(f"domcount: parse error: {exc}", file=sys.stderr)
        return 2
    except SizeLimitError as exc:
        print(f"domcount: size limit: {exc}", file=sys.stderr)
        return 4
    except (InfeasibleOrderError, UndefinedTotalDominationError, ValueError) as exc:
        print(f"domcount: infeasible: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"domcount: {exc}", file=sys.stderr)
        return 1
    report["elapsed_ms"] = int((time.perf_counter() - start) * 1000)
    ordered = {key: report[key] for key in _KEY_ORDER if key in report}
    print(json.dumps(ordered, indent=2))
    return 0


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))
