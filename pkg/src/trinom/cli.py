"""Command-line front end: ``trinom compute ...`` and ``trinom verify ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Callable, Sequence

from . import exactcomb, qpoly
from .congruences import CHECKS, ENGINES, SELECTION_ALIASES, CongruenceResult, SuiteReport, run_suite

FORMATS = ("table", "json", "csv")
CSV_HEADER = ("statement", "prime", "params", "lhs", "rhs", "modulus", "passed")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _trinomial(n: int, j: int, method: str = "recurrence") -> int:
    if n < 0:
        raise UsageError("n must be nonnegative")
    return exactcomb.trinomial(n, j, method)


def _nonneg(fn: Callable[..., object]) -> Callable[..., object]:
    def wrapped(*args: int):
        if any(a < 0 for a in args):
            raise UsageError("arguments must be nonnegative")
        return fn(*args)

    return wrapped


def _positive(fn):
    def wrapped(*args: int):
        if any(a < 1 for a in args):
            raise UsageError("arguments must be positive")
        return fn(*args)

    return wrapped


def _q_binomial(n: int, k: int, b: int = 1):
    if b < 1:
        raise UsageError("base exponent must be positive")
    return qpoly.q_binomial(n, k, b)


# quantity -> (allowed arities, function)
QUANTITIES: dict[str, tuple[tuple[int, ...], Callable[..., object]]] = {
    "trinomial": ((2,), _trinomial),
    "binomial": ((2,), exactcomb.binomial),
    "catalan": ((1,), _nonneg(exactcomb.catalan)),
    "super-catalan": ((2,), _nonneg(exactcomb.super_catalan)),
    "q-binomial": ((2, 3), _q_binomial),
    "t1": ((2,), lambda n, j: _t(qpoly.t1, n, j)),
    "t2": ((2,), lambda n, j: _t(qpoly.t2, n, j)),
    "t3": ((2,), lambda n, j: _t(qpoly.t3, n, j)),
    "q-integer": ((1,), _positive(qpoly.q_integer)),
}


def _t(fn, n: int, j: int):
    if n < 0:
        raise UsageError("n must be nonnegative")
    return fn(n, j)


def format_poly(p: qpoly.QPolynomial, pretty: bool = False) -> str:
    return p.pretty() if pretty else json.dumps(p.to_list())


def _witness_text(w, pretty: bool) -> str:
    if isinstance(w, tuple):
        return format_poly(qpoly.QPolynomial(w), pretty)
    return str(w)


def _params_text(params: dict) -> str:
    return ";".join(f"{k}={v}" for k, v in sorted(params.items()))


def parse_prime_range(text: str) -> tuple[int, int]:
    """Parse ``lo..hi`` (inclusive)."""
    try:
        lo_s, hi_s = text.split("..")
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo..hi, got {text!r}") from None
    if lo < 2 or lo > hi:
        raise argparse.ArgumentTypeError(f"need 2 <= lo <= hi, got {text!r}")
    return lo, hi


def _default_format() -> str:
    fmt = os.environ.get("TRINOM_DEFAULT_FORMAT", "table").strip().lower() or "table"
    if fmt not in FORMATS:
        raise UsageError(f"TRINOM_DEFAULT_FORMAT must be one of {', '.join(FORMATS)}, got {fmt!r}")
    return fmt


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trinom",
        description="Exact trinomial coefficients, q-analogs and congruence checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None,
                        help="output format (default: table, or $TRINOM_DEFAULT_FORMAT)")
    common.add_argument("--pretty", action="store_true",
                        help="render polynomials as 1 + q + 2q^2 instead of coefficient lists")

    c = sub.add_parser("compute", parents=[common], help="print one exact quantity")
    c.add_argument("quantity", choices=sorted(QUANTITIES))
    c.add_argument("args", nargs="*", type=int)
    c.add_argument("--method", choices=sorted(exactcomb.TRINOMIAL_METHODS), default="recurrence",
                   help="trinomial computation route")

    v = sub.add_parser("verify", parents=[common], help="check congruences over a prime range")
    v.add_argument("statements", nargs="+", metavar="STATEMENT",
                   help="check names or aliases: " + ", ".join([*CHECKS, *SELECTION_ALIASES]))
    v.add_argument("--primes", type=parse_prime_range, default=(5, 31), metavar="LO..HI",
                   help="inclusive prime range (default 5..31)")
    v.add_argument("--fail-fast", action="store_true", help="stop at the first failure")
    v.add_argument("--jobs", type=int, default=1, metavar="N", help="worker processes")
    v.add_argument("--engine", choices=ENGINES, default="exact",
                   help="integer theorem checks: exact big integers or fixed-width residues")
    v.add_argument("--no-timing", action="store_true",
                   help="report elapsed_ms as 0 so output is byte-reproducible")
    return parser


def _render_value(value, pretty: bool) -> str:
    if isinstance(value, qpoly.QPolynomial):
        return format_poly(value, pretty)
    return str(value)


def cmd_compute(args, fmt: str, out) -> int:
    arities, fn = QUANTITIES[args.quantity]
    if len(args.args) not in arities:
        raise UsageError(
            f"{args.quantity} takes {' or '.join(map(str, arities))} integer argument(s), got {len(args.args)}"
        )
    if args.quantity == "trinomial":
        value = fn(*args.args, args.method)
    else:
        value = fn(*args.args)
    if fmt == "json":
        payload = value.to_list() if isinstance(value, qpoly.QPolynomial) else value
        out.write(json.dumps({"quantity": args.quantity, "args": args.args, "value": payload}) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(("quantity", "args", "value"))
        w.writerow((args.quantity, " ".join(map(str, args.args)), _render_value(value, args.pretty)))
    else:
        out.write(_render_value(value, args.pretty) + "\n")
    return EXIT_OK


def render_json(report: SuiteReport) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


def render_csv(report: SuiteReport, pretty: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in report.results:
        w.writerow((
            r.statement,
            r.prime,
            _params_text(r.params),
            _witness_text(r.lhs, pretty),
            _witness_text(r.rhs, pretty),
            r.modulus,
            "true" if r.passed else "false",
        ))
    return buf.getvalue()


def _status(r: CongruenceResult) -> str:
    if r.passed:
        return "pass"
    return "COUNTEREXAMPLE" if r.is_conjecture else "FAIL"


def render_table(report: SuiteReport, pretty: bool = False) -> str:
    rows = [("statement", "prime", "params", "lhs", "rhs", "modulus", "status")]
    for r in report.results:
        rows.append((
            r.statement,
            str(r.prime),
            _params_text(r.params) or "-",
            _witness_text(r.lhs, pretty),
            _witness_text(r.rhs, pretty),
            str(r.modulus),
            _status(r),
        ))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(wd) for cell, wd in zip(row, widths)).rstrip() for row in rows]
    lines.append(
        f"{len(report.results)} results, {report.failures} failures, "
        f"{len(report.skipped)} skipped, {report.elapsed_ms} ms"
    )
    for s in report.skipped:
        lines.append(f"skipped {s.statement} at p={s.prime}: {s.reason}")
    for r in report.counterexamples:
        lines.append(f"conjecture counterexample at p={r.prime}")
    if report.stopped_early:
        lines.append("stopped at first failure (--fail-fast)")
    return "\n".join(lines) + "\n"


def cmd_verify(args, fmt: str, out) -> int:
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    lo, hi = args.primes
    try:
        report = run_suite(lo, hi, args.statements, jobs=args.jobs,
                           engine=args.engine, fail_fast=args.fail_fast)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.no_timing:
        report.elapsed_ms = 0
    if fmt == "json":
        out.write(render_json(report))
    elif fmt == "csv":
        out.write(render_csv(report, args.pretty))
    else:
        out.write(render_table(report, args.pretty))
    return EXIT_FAIL if report.failures else EXIT_OK


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    try:
        fmt = args.format or _default_format()
        if args.command == "compute":
            return cmd_compute(args, fmt, out)
        return cmd_verify(args, fmt, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"trinom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
