"""Command-line interface for running check sweeps and emitting reports."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .catalog import (
    DEFAULT_T_PANEL,
    Report,
    builtin_checks,
    run_suite,
    select_checks,
)

__all__ = ["build_parser", "main", "format_report"]


def _parse_prime_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
    else:
        lo_s = hi_s = text
    try:
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"prime range must look like LO..HI, got {text!r}"
        ) from None
    if lo > hi or lo < 2:
        raise argparse.ArgumentTypeError(f"empty or invalid prime range {text!r}")
    return lo, hi


def _parse_t_panel(text: str) -> tuple[Fraction, ...]:
    try:
        values = tuple(Fraction(part.strip()) for part in text.split(",") if part.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad t panel {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("t panel must contain at least one value")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="congrlab",
        description="Verify prime-power congruences and exact identities for "
        "central binomial sums, harmonic sums, and Lucas sequences.",
    )
    parser.add_argument(
        "--primes",
        type=_parse_prime_range,
        default=(7, 1000),
        metavar="LO..HI",
        help="inclusive prime range to sweep (default 7..1000)",
    )
    parser.add_argument(
        "--checks",
        default="all",
        metavar="PATTERN[,PATTERN...]",
        help="comma-separated check ids, glob patterns, or family prefixes "
        "(default: all)",
    )
    parser.add_argument(
        "--jobs",
        type=int,
        default=int(os.environ.get("CONGRLAB_JOBS", "1")),
        metavar="N",
        help="worker processes (default: $CONGRLAB_JOBS or 1)",
    )
    parser.add_argument(
        "--format",
        choices=("json", "csv", "text"),
        default="text",
        help="report format (default: text)",
    )
    parser.add_argument(
        "--output",
        metavar="PATH",
        default=None,
        help="write the report to PATH instead of stdout",
    )
    parser.add_argument(
        "--fail-fast",
        action="store_true",
        help="stop scheduling new work after the first failing batch",
    )
    parser.add_argument(
        "--list-checks",
        action="store_true",
        help="list all registered checks and exit",
    )
    parser.add_argument(
        "--no-cap",
        action="store_true",
        help="ignore per-check prime caps (some checks cost O(p^2) per prime)",
    )
    parser.add_argument(
        "--t-panel",
        type=_parse_t_panel,
        default=DEFAULT_T_PANEL,
        metavar="a/b[,a/b...]",
        help="override the rational parameter panel for t-dependent checks",
    )
    return parser


def _list_checks(stream) -> None:
    for check in builtin_checks():
        if check.kind == "congruence":
            extra = f"mod p^{check.target_exponent}, p >= {check.min_prime}"
            if check.excluded_primes:
                extra += f", p not in {sorted(check.excluded_primes)}"
            if check.uses_t_panel:
                extra += ", per panel t"
            if check.prime_cap:
                extra += f", capped at p <= {check.prime_cap}"
        else:
            extra = f"exact, {len(check.cases)} cases"
        stream.write(f"{check.id:16s} [{check.kind}] {extra}\n")
        stream.write(f"{'':16s}   {check.statement}\n")


def format_report(report: Report, fmt: str) -> str:
    """Render a report as json, csv, or an aligned text table."""
    records = report.records()
    if fmt == "json":
        return json.dumps(records, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["check", "prime", "t", "target", "valuation", "pass", "lhs", "rhs", "us"])
        for rec in records:
            writer.writerow(
                [
                    rec["check"],
                    "" if rec["prime"] is None else rec["prime"],
                    "" if rec["t"] is None else rec["t"],
                    rec["target"],
                    rec["valuation"],
                    "true" if rec["pass"] else "false",
                    rec["lhs"],
                    rec["rhs"],
                    rec["us"],
                ]
            )
        return buf.getvalue()
    lines = []
    for rec in records:
        prime = "-" if rec["prime"] is None else f"p={rec['prime']}"
        tpart = "" if rec["t"] is None else f" t={rec['t']}"
        verdict = "PASS" if rec["pass"] else "FAIL"
        lines.append(
            f"{rec['check']:16s} {prime:>7s}{tpart:>12s}  "
            f"v={rec['valuation']}/{rec['target']}  {verdict}"
        )
    passed, failed, errored = report.counts()
    lines.append(
        f"# {len(records)} checks: {passed} passed, {failed} failed, {errored} errored"
    )
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.list_checks:
        try:
            _list_checks(sys.stdout)
        except BrokenPipeError:
            sys.stdout = open(os.devnull, "w", encoding="utf-8")
        return 0

    patterns = tuple(part.strip() for part in args.checks.split(",") if part.strip())
    if not select_checks(patterns or ("all",)):
        print(f"error: no registered check matches {args.checks!r}", file=sys.stderr)
        return 2
    report = run_suite(
        prime_lo=args.primes[0],
        prime_hi=args.primes[1],
        patterns=patterns or ("all",),
        jobs=max(1, args.jobs),
        t_panel=args.t_panel,
        fail_fast=args.fail_fast,
        no_cap=args.no_cap,
    )

    rendered = format_report(report, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    else:
        try:
            sys.stdout.write(rendered)
        except BrokenPipeError:
            sys.stdout = open(os.devnull, "w", encoding="utf-8")

    passed, failed, errored = report.counts()
    print(
        f"checked {len(report.results)} instances: {passed} passed, "
        f"{failed} failed, {errored} errored in {report.wall_seconds:.1f}s",
        file=sys.stderr,
    )
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
