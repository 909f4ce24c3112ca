"""Command line front end.

Exit codes: 0 all applicable tests pass, 1 some obstruction fails, 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .branch import build_branch_matrix, extract_lambda
from .errors import NoUnitaryPhase, TripointError
from .graph import graph_norm, parse_pair
from .obstruct import DEFAULT_TRACE_TOL, ObstructionReport, allowed_ratios, run_battery
from .qnum import nu_from_delta


def _sig12(x: float) -> float:
    """Round to 12 significant digits for machine-readable output."""
    return float(f"{x:.12g}")


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _fmt_complex(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}i"


def _complex_dict(z: complex) -> dict:
    return {"re": _sig12(z.real), "im": _sig12(z.imag)}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tripoint",
        description="Triple point obstruction checks for candidate principal graph pairs.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--tol", type=float, default=DEFAULT_TRACE_TOL,
        help="tolerance for obstruction verdicts (default 1e-6)",
    )
    common.add_argument("--format", choices=("text", "json"), default="text")

    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser(
        "check", parents=[common], help="run the obstruction battery on graph pair files"
    )
    p_check.add_argument("files", nargs="+", metavar="FILE")
    p_check.add_argument(
        "--parallel", action="store_true", help="process files concurrently"
    )

    p_ratios = sub.add_parser(
        "ratios", parents=[common], help="tabulate admissible dimension ratios"
    )
    p_ratios.add_argument("--n", type=int, required=True, help="arm depth (even, >= 2)")
    which = p_ratios.add_mutually_exclusive_group(required=True)
    which.add_argument("--delta", type=float, help="graph norm (>= 2)")
    which.add_argument("--index", type=float, help="index delta^2 (>= 4)")

    p_matrix = sub.add_parser(
        "matrix", parents=[common], help="print the branch matrix, phases and lambda"
    )
    p_matrix.add_argument("--n", type=int, required=True)
    p_matrix.add_argument("--delta", type=float, required=True)
    p_matrix.add_argument("--p", type=float, required=True)
    p_matrix.add_argument("--q", type=float, required=True)

    p_qnum = sub.add_parser("qnum", parents=[common], help="print quantum integers")
    p_qnum.add_argument("--delta", type=float, required=True)
    p_qnum.add_argument("--max", dest="max_k", type=int, required=True)

    return parser


# ---------------------------------------------------------------------------
# check

def _check_one(path: str, tol: float) -> ObstructionReport:
    text = Path(path).read_text(encoding="utf-8")
    principal, dual = parse_pair(text)
    ctx = nu_from_delta(graph_norm(principal))
    return run_battery(ctx, principal, dual, tol=tol)


def _render_report_text(path: str, report: ObstructionReport) -> str:
    lines = [
        f"file: {path}",
        f"  n = {report.n}   delta = {_fmt(report.delta)}",
        f"  p = {_fmt(report.p)}   q = {_fmt(report.q)}   r = {_fmt(report.r)}",
        f"  lambda + 1/lambda = {_fmt(report.lambda_trace)}",
        "  verdicts:",
    ]
    for name, verdict in report.verdicts.items():
        lines.append(f"    {name:<18} {verdict.value}")
    lines.append("  root candidates (k, |trace - 2cos(2 pi k/n)|):")
    for cand in report.root_candidates:
        lines.append(f"    k={cand.k:<3d} {cand.distance:.3e}")
    lines.append(f"  tol = {_fmt(report.tol)}")
    return "\n".join(lines)


def _report_json(path: str, report: ObstructionReport) -> str:
    raw = report.as_dict()
    payload = {
        "file": path,
        "n": raw["n"],
        "delta": _sig12(raw["delta"]),
        "p": _sig12(raw["p"]),
        "q": _sig12(raw["q"]),
        "r": _sig12(raw["r"]),
        "lambda_trace": _sig12(raw["lambda_trace"]),
        "verdicts": raw["verdicts"],
        "root_candidates": [
            {"k": c["k"], "distance": _sig12(c["distance"])}
            for c in raw["root_candidates"]
        ],
        "tol": _sig12(raw["tol"]),
    }
    return json.dumps(payload)


def _cmd_check(args: argparse.Namespace) -> int:
    def worker(path: str):
        try:
            return _check_one(path, args.tol)
        except (TripointError, OSError) as exc:
            return exc

    if args.parallel and len(args.files) > 1:
        with ThreadPoolExecutor() as pool:
            outcomes = list(pool.map(worker, args.files))
    else:
        outcomes = [worker(path) for path in args.files]

    had_error = False
    had_failure = False
    for path, outcome in zip(args.files, outcomes):
        if isinstance(outcome, Exception):
            had_error = True
            print(f"{path}: {outcome}", file=sys.stderr)
            continue
        had_failure = had_failure or outcome.has_failure
        if args.format == "json":
            print(_report_json(path, outcome))
        else:
            print(_render_report_text(path, outcome))
    if had_error:
        return 2
    return 1 if had_failure else 0


# ---------------------------------------------------------------------------
# ratios

def _cmd_ratios(args: argparse.Namespace) -> int:
    if args.n < 2 or args.n % 2 != 0:
        print(f"n = {args.n} must be even and >= 2", file=sys.stderr)
        return 2
    if args.delta is not None:
        delta = args.delta
    else:
        if args.index < 4:
            print(f"index = {args.index} must be >= 4", file=sys.stderr)
            return 2
        delta = math.sqrt(args.index)
    try:
        ctx = nu_from_delta(delta)
        rows = allowed_ratios(ctx, args.n)
    except TripointError as exc:
        print(str(exc), file=sys.stderr)
        return 2

    if args.format == "json":
        payload = {
            "n": args.n,
            "delta": _sig12(ctx.delta),
            "rows": [
                {
                    "k": row.k,
                    "lambda_trace": _sig12(row.lambda_trace),
                    "r": _sig12(row.r),
                    "p": _sig12(row.p),
                    "q": _sig12(row.q),
                }
                for row in rows
            ],
        }
        print(json.dumps(payload))
    else:
        print(f"admissible ratios for n = {args.n}, delta = {_fmt(ctx.delta)}")
        print(f"{'k':>3}  {'lambda_trace':>18}  {'r':>18}  {'p':>18}  {'q':>18}  {'p-q':>18}")
        for row in rows:
            print(
                f"{row.k:>3}  {row.lambda_trace:>18.12g}  {row.r:>18.12g}"
                f"  {row.p:>18.12g}  {row.q:>18.12g}  {row.p - row.q:>18.12g}"
            )
    return 0


# ---------------------------------------------------------------------------
# matrix

def _cmd_matrix(args: argparse.Namespace) -> int:
    try:
        ctx = nu_from_delta(args.delta)
        matrix = build_branch_matrix(ctx, args.n, args.p, args.q)
        lam = extract_lambda(matrix, tol=args.tol)
    except NoUnitaryPhase:
        print("no unitary phase: p - q > 1")
        return 1
    except TripointError as exc:
        print(str(exc), file=sys.stderr)
        return 2

    trace = 2.0 * lam.real
    if args.format == "json":
        payload = {
            "n": args.n,
            "delta": _sig12(ctx.delta),
            "p": _sig12(args.p),
            "q": _sig12(args.q),
            "entries": [
                [None if z is None else _complex_dict(z) for z in row]
                for row in matrix.entries
            ],
            "sigma": _complex_dict(matrix.sigma),
            "tau": _complex_dict(matrix.tau),
            "lambda": _complex_dict(lam),
            "lambda_trace": _sig12(trace),
        }
        print(json.dumps(payload))
    else:
        print(
            f"branch matrix for n = {args.n}, delta = {_fmt(ctx.delta)},"
            f" p = {_fmt(args.p)}, q = {_fmt(args.q)}"
        )
        cells = [
            ["?" if z is None else _fmt(z.real) if abs(z.imag) <= ctx.tol else _fmt_complex(z) for z in row]
            for row in matrix.entries
        ]
        width = max(len(c) for row in cells for c in row)
        for row in cells:
            print("  [ " + "   ".join(c.ljust(width) for c in row) + " ]")
        print(f"sigma  = {_fmt_complex(matrix.sigma)}")
        print(f"tau    = {_fmt_complex(matrix.tau)}")
        print(f"lambda = {_fmt_complex(lam)}")
        print(f"lambda + 1/lambda = {_fmt(trace)}")
    return 0


# ---------------------------------------------------------------------------
# qnum

def _cmd_qnum(args: argparse.Namespace) -> int:
    try:
        ctx = nu_from_delta(args.delta)
        values = ctx.qints(args.max_k)
    except TripointError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps({"delta": _sig12(ctx.delta), "values": [_sig12(v) for v in values]}))
    else:
        print(" ".join(_fmt(v) for v in values))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.tol > 0:
        parser.error("--tol must be positive")
    handlers = {
        "check": _cmd_check,
        "ratios": _cmd_ratios,
        "matrix": _cmd_matrix,
        "qnum": _cmd_qnum,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
