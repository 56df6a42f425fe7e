"""Command-line front end.

Subcommands::

    ladder          print the exact rational solution ladder
    verify          run the exact verification suites (exit 1 on failure)
    factor          right-divide an operator by D - g and show the Darboux transform
    bessel-compare  CSV comparison of the plus branch against K-Bessel log-derivatives
    cf              print (and optionally evaluate) a continued fraction

Exit codes: 0 success, 1 verification or evaluation failure, 2 usage or
expression parse errors.  Output goes to stdout unless --out is given.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bessel import compare_ladder_to_bessel
from .chebyshev import chebyshev_cf, chebyshev_f
from .contfrac import CFPoleError
from .operators import DiffOp, darboux, right_divide
from .parse import ExprError, parse_expression
from .riccati import bessel_cf, ladder
from .verify import SUITES, run_suite

GRAMMAR_HELP = (
    "Expressions use atoms D (derivative), x, and integer literals with "
    "+ - * / ^ and parentheses; ^ binds tightest, then * and /, then + and -, "
    "all left-associative. '*' composes when both sides are operators and "
    "scales otherwise, so D*x equals x*D; lift a scalar to a multiplication "
    "operator with D^0 (e.g. D*(x*D^0) = x*D + 1). '/' requires a scalar "
    "divisor."
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laddercf",
        description="Exact Riccati ladders, Darboux transforms, and continued "
                    "fractions, with numeric Bessel cross-checks.",
        epilog=GRAMMAR_HELP,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ladder = sub.add_parser("ladder", help="print the exact solution ladder")
    p_ladder.add_argument("--depth", type=int, required=True, help="number of rungs (>= 1)")
    p_ladder.add_argument("--branch", choices=("minus", "plus"), default="minus")
    p_ladder.add_argument("--format", choices=("text", "json"), default="text")
    p_ladder.add_argument("--out", help="write output to this file instead of stdout")

    p_verify = sub.add_parser("verify", help="run exact verification suites")
    p_verify.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p_verify.add_argument("--max-n", type=int, default=None, dest="max_n",
                          help="sweep bound (ladder depth / polynomial index / sample count)")
    p_verify.add_argument("--out", help="write output to this file instead of stdout")

    p_factor = sub.add_parser(
        "factor",
        help="split A = Q @ (D - g) + R; if R = 0, also print the Darboux transform",
        epilog=GRAMMAR_HELP)
    p_factor.add_argument("--op", required=True, help="operator expression A")
    p_factor.add_argument("--g", required=True, help="scalar expression g")
    p_factor.add_argument("--out", help="write output to this file instead of stdout")

    p_bc = sub.add_parser("bessel-compare",
                          help="CSV: plus-branch ladder vs -x K'/K of half-integer order")
    p_bc.add_argument("--max-order", type=int, required=True, dest="max_order",
                      help="largest ladder index j")
    p_bc.add_argument("--grid", required=True,
                      help="a:b:n for n evenly spaced points from a to b (a > 0)")
    p_bc.add_argument("--out", help="write output to this file instead of stdout")

    p_cf = sub.add_parser("cf", help="print a finite continued fraction")
    p_cf.add_argument("--target", choices=("bessel", "chebyshev"), required=True)
    p_cf.add_argument("--depth", type=int, required=True)
    p_cf.add_argument("--branch", choices=("minus", "plus"), default="minus",
                      help="bessel target only")
    p_cf.add_argument("--eval", type=float, default=None, dest="eval_at",
                      help="also evaluate numerically at this point")
    p_cf.add_argument("--grid", default=None,
                      help="a:b:n grid for CSV evaluation (columns x,depth,value)")
    p_cf.add_argument("--format", choices=("text", "json"), default="text")
    p_cf.add_argument("--out", help="write output to this file instead of stdout")
    return parser


def _parse_grid(spec: str, require_positive: bool = True) -> list[float]:
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid must be a:b:n, got {spec!r}")
    a, b = float(parts[0]), float(parts[1])
    n = int(parts[2])
    if n < 1:
        raise ValueError("grid needs at least one point")
    if require_positive and a <= 0:
        raise ValueError("x must be positive (grid start a > 0)")
    if n == 1:
        return [a]
    step = (b - a) / (n - 1)
    return [a + i * step for i in range(n)]


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _cmd_ladder(args) -> int:
    if args.depth < 1:
        raise UsageError("--depth must be >= 1")
    states = ladder(args.depth, args.branch)
    if args.format == "json":
        payload = {"branch": args.branch, "lambda": "1",
                   "states": [s.to_json_obj() for s in states]}
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        lines = [f"f_{s.j} = {s.f}    (beta_{s.j} = {s.beta})" for s in states]
        _emit("\n".join(lines), args.out)
    return 0


def _cmd_verify(args) -> int:
    if args.max_n is not None and args.max_n < 1:
        raise UsageError("--max-n must be >= 1")
    report = run_suite(args.suite, args.max_n)
    lines = [f"suite: {report.suite}"]
    for case in report.cases:
        lines.append(f"  {case.status.upper():7s} {case.case_id} -- {case.detail}")
    passed, failed, flagged = report.counts
    lines.append(f"overall: {report.overall.upper()} "
                 f"({passed} pass, {failed} fail, {flagged} flagged)")
    _emit("\n".join(lines), args.out)
    return 0 if report.overall == "pass" else 1


def _cmd_factor(args) -> int:
    op_value = parse_expression(args.op)
    if not isinstance(op_value, DiffOp) or op_value.order < 1:
        raise UsageError(f"--op must be a differential operator of order >= 1, got {op_value}")
    g_value = parse_expression(args.g)
    if isinstance(g_value, DiffOp):
        raise UsageError(f"--g must be a scalar expression, got an operator: {g_value}")
    q, r = right_divide(op_value, g_value)
    lines = [f"A = {op_value}", f"g = {g_value}", f"Q = {q}", f"R = {r}"]
    if r.is_zero:
        lines.append(f"A = Q*(D - g) exactly; Darboux transform: A^ = {darboux(op_value, g_value)}")
    else:
        lines.append("not divisible: remainder is nonzero, so g is not a kernel "
                     "logarithmic derivative of A")
    _emit("\n".join(lines), args.out)
    return 0


def _cmd_bessel_compare(args) -> int:
    if args.max_order < 1:
        raise UsageError("--max-order must be >= 1")
    try:
        grid = _parse_grid(args.grid)
    except ValueError as exc:
        raise UsageError(str(exc))
    report = compare_ladder_to_bessel(args.max_order, grid)
    lines = report.to_csv_lines()
    lines.append(f"# max_abs_err = {report.max_abs_err!r}")
    _emit("\n".join(lines), args.out)
    return 0


def _cmd_cf(args) -> int:
    if args.depth < 1:
        raise UsageError("--depth must be >= 1")
    cf = bessel_cf(args.depth, args.branch) if args.target == "bessel" else chebyshev_cf(args.depth)
    if args.grid is not None:
        try:
            grid = _parse_grid(args.grid, require_positive=False)
        except ValueError as exc:
            raise UsageError(str(exc))
        lines = ["x,depth,value"]
        for x0 in grid:
            try:
                lines.append(f"{x0},{args.depth},{cf.eval_float(x0)!r}")
            except (CFPoleError, ZeroDivisionError):
                lines.append(f"{x0},{args.depth},pole")
        _emit("\n".join(lines), args.out)
        return 0
    lines: list[str] = []
    if args.format == "json":
        lines.append(json.dumps(cf.to_json_obj(), indent=2))
    else:
        lines.append(str(cf))
        if args.target == "chebyshev":
            lines.append(f"collapses to: {chebyshev_f(args.depth, 'minus')}")
    if args.eval_at is not None:
        try:
            value = cf.eval_float(args.eval_at)
        except CFPoleError as exc:
            _emit("\n".join(lines + [f"evaluation failed: {exc}"]), args.out)
            return 1
        lines.append(f"value at x = {args.eval_at}: {value!r}")
    _emit("\n".join(lines), args.out)
    return 0


class UsageError(Exception):
    pass


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "ladder": _cmd_ladder,
        "verify": _cmd_verify,
        "factor": _cmd_factor,
        "bessel-compare": _cmd_bessel_compare,
        "cf": _cmd_cf,
    }
    try:
        return handlers[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ExprError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
