"""``sombor-unicyclic`` command line.

Exit codes: 0 when every requested check passes, 1 when a check fails,
2 for bad input (usage, malformed files, invalid parameters).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from sombor_unicyclic.enumeration import (
    MAX_ORDER,
    MIN_ORDER,
    enumerate_unicyclic,
    reports_table,
    reports_to_csv,
    reports_to_text,
    verify_theorem,
)
from sombor_unicyclic.graph import GraphError, format_edge_list, pendant_count, read_edge_list, unicyclic_witness
from sombor_unicyclic.sombor import (
    ExtremalParams,
    InvalidParams,
    build_extremal,
    closed_form_so,
    sombor_index,
    sweep_all,
)
from sombor_unicyclic.transforms import ascend, format_trace

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _num(x: float) -> str:
    return f"{x:.10g}"


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sombor-unicyclic",
        description="Sombor index tools for unicyclic graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("index", help="print the Sombor index of an edge-list file")
    p.add_argument("file", type=Path)

    p = sub.add_parser("extremal", help="closed-form maximum for U(N, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--emit-graph", action="store_true", help="also print the extremal graph")

    p = sub.add_parser("verify", help="exhaustive check of the extremal graph for N <= n-max")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--csv", type=Path, help="write per-class CSV here")
    p.add_argument("--report", type=Path, help="write the per-class text report here")
    p.add_argument("--threads", type=_positive, default=1)

    p = sub.add_parser("ascend", help="run the greedy move ascent on an edge-list file")
    p.add_argument("file", type=Path)
    p.add_argument("--trace", type=Path, help="write the trace here instead of stdout")

    p = sub.add_parser("check-lemmas", help="sweep the elementary inequalities")
    p.add_argument("--range", dest="limit", type=int, default=200)

    p = sub.add_parser("enumerate", help="list one graph per class, blank-line separated")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--threads", type=_positive, default=1)
    return parser


def _params(n: int, k: int) -> ExtremalParams:
    try:
        return ExtremalParams(n, k)
    except InvalidParams as exc:
        raise UsageError(str(exc)) from None


def _cmd_index(args, out) -> int:
    out.write(_num(sombor_index(read_edge_list(args.file))) + "\n")
    return EXIT_OK


def _cmd_extremal(args, out) -> int:
    p = _params(args.n, args.k)
    out.write(_num(closed_form_so(p)) + "\n")
    if args.emit_graph:
        out.write(format_edge_list(build_extremal(p)))
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    if not 4 <= args.n_max <= MAX_ORDER:
        raise UsageError(f"--n-max must lie in [4, {MAX_ORDER}] (smallest valid class has N >= k+3 = 4)")
    reports = verify_theorem(args.n_max, workers=args.threads)
    out.write(reports_table(reports))
    failed = [r for r in reports if not r.passed]
    out.write(f"classes: {len(reports)}  passed: {len(reports) - len(failed)}  failed: {len(failed)}\n")
    if args.csv:
        args.csv.write_text(reports_to_csv(reports), encoding="utf-8")
    if args.report:
        args.report.write_text(reports_to_text(reports), encoding="utf-8")
    return EXIT_FAIL if failed else EXIT_OK


def _cmd_ascend(args, out) -> int:
    g = read_edge_list(args.file)
    if unicyclic_witness(g) is None:
        raise UsageError("input graph is not unicyclic (needs connected with |E| = |V|)")
    k = pendant_count(g)
    if k < 1:
        raise UsageError("ascent needs at least one pendant vertex (k >= 1)")
    trace = ascend(g)
    text = format_trace(trace)
    if args.trace:
        args.trace.write_text(text, encoding="utf-8")
    else:
        out.write(text)
    verdict = "isomorphic" if trace.reached_extremal else "not isomorphic"
    out.write(f"steps: {len(trace.steps)}\n")
    out.write(f"final SO: {_num(sombor_index(trace.final))}\n")
    out.write(f"final graph {verdict} to the extremal graph for N={g.n}, k={k}\n")
    return EXIT_OK if trace.reached_extremal else EXIT_FAIL


def _cmd_check_lemmas(args, out) -> int:
    if args.limit < 2:
        raise UsageError("--range must be >= 2")
    ok = True
    for res in sweep_all(limit=args.limit, ab_max=min(20, args.limit)):
        ok &= res.ok
        status = "ok" if res.ok else "FAIL"
        out.write(
            f"{res.name:<14} checked={res.checked:<7} counterexamples={len(res.counterexamples):<4}"
            f" equalities={len(res.equalities):<4} {status}\n"
        )
        for case in res.counterexamples[:10]:
            out.write(f"  counterexample {case}\n")
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_enumerate(args, out) -> int:
    if not MIN_ORDER <= args.n <= MAX_ORDER:
        raise UsageError(f"--n must lie in [{MIN_ORDER}, {MAX_ORDER}]")
    if args.k is not None and args.k < 0:
        raise UsageError("--k must be >= 0")
    first = True
    for g in enumerate_unicyclic(args.n, args.k, workers=args.threads):
        if not first:
            out.write("\n")
        out.write(format_edge_list(g))
        first = False
    return EXIT_OK


_COMMANDS = {
    "index": _cmd_index,
    "extremal": _cmd_extremal,
    "verify": _cmd_verify,
    "ascend": _cmd_ascend,
    "check-lemmas": _cmd_check_lemmas,
    "enumerate": _cmd_enumerate,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _COMMANDS[args.command](args, out)
    except (UsageError, GraphError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> int:
    return run()
