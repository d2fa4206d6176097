"""Command line front end.

Exit status: 0 success, 1 verification failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import csv
import sys
import time
from typing import List, Optional, Sequence

from . import kerov
from .checks import run_checks
from .render import sigma_text, to_json, to_latex
from .young import Partition, PartitionError, free_cumulants


def _formulas(text: str) -> List[int]:
    if text == "all":
        return list(kerov.FORMULAS)
    try:
        out = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad formula list {text!r}") from None
    if not out or any(f not in kerov.FORMULAS for f in out):
        raise argparse.ArgumentTypeError(f"formulas must be drawn from 1,2,3 (got {text!r})")
    return out


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def cmd_sigma(args) -> int:
    formula = args.formula
    chosen = kerov.FORMULAS if formula == "all" else (int(formula),)
    results = [kerov.sigma(args.k, f) for f in chosen]
    first = results[0].sigma
    if any(r.sigma != first for r in results[1:]):
        for r in results:
            print(f"formula {r.formula_id}: {r.sigma}", file=sys.stderr)
        print(f"error: formulas disagree on Sigma_{args.k}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(to_json(args.k, formula, first))
    elif args.format == "latex":
        print(to_latex(first))
    else:
        print(sigma_text(args.k, first))
    if len(results) > 1:
        print(f"# Sigma_{args.k}: formulas {', '.join(map(str, chosen))} agree", file=sys.stderr)
    return 0


def cmd_cumulants(args) -> int:
    try:
        lam = Partition.parse(args.partition)
    except PartitionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for k, value in free_cumulants(lam, args.kmax).items():
        print(f"R_{k} = {value}")
    return 0


def cmd_check(args) -> int:
    report = run_checks(args.nmax, args.kmax)
    return 0 if report.passed else 1


def bench_rows(kmax: int, formulas: Sequence[int]):
    """``(k, formula, milliseconds, terms)`` for each pair, caches cleared first."""
    rows = []
    for k in range(1, kmax + 1):
        for f in formulas:
            kerov.clear_caches()
            start = time.perf_counter()
            result = kerov.sigma(k, f)
            elapsed = (time.perf_counter() - start) * 1000.0
            rows.append((k, f, elapsed, len(result.sigma)))
    return rows


def cmd_bench(args) -> int:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["k", "formula", "milliseconds", "terms"])
    for k, f, ms, terms in bench_rows(args.kmax, args.formulas):
        writer.writerow([k, f, f"{ms:.3f}", terms])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kerovpoly", description="Kerov polynomials and free cumulants.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sigma", help="print the Kerov polynomial Sigma_k")
    p.add_argument("k", type=_positive)
    p.add_argument("--formula", choices=["1", "2", "3", "all"], default="all")
    p.add_argument("--format", choices=["text", "json", "latex"], default="text")
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("cumulants", help="free cumulants of a partition such as 4,3,1")
    p.add_argument("partition")
    p.add_argument("--kmax", type=int, default=6)
    p.set_defaults(func=cmd_cumulants)

    p = sub.add_parser("check", help="run the verification suite")
    p.add_argument("--nmax", type=_nonnegative, default=8)
    p.add_argument("--kmax", type=_positive, default=10)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", help="time the three formulas (CSV on stdout)")
    p.add_argument("--kmax", type=_positive, default=8)
    p.add_argument("--formulas", type=_formulas, default=list(kerov.FORMULAS))
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "cumulants" and args.kmax < 2:
        parser.error("--kmax must be >= 2")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
