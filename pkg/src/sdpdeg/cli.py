"""Command-line front end: single degree values, full Pataki tables, and the
self-verification suites.

Exit codes: 0 success, 1 verification failure, 2 invalid triple or usage,
3 cross-check or duality disagreement.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Sequence, Union

from .degree import (
    CrossCheckError,
    DegreeResult,
    InvalidTripleError,
    delta,
    duality_partner,
    valid_triples,
    validate_triple,
)
from .verify import SUITES

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID = 2
EXIT_DISAGREEMENT = 3

CSV_FIELDS = ("m", "n", "r", "k", "l", "delta", "method")


def _record(result: DegreeResult) -> dict:
    t = result.triple
    return {
        "m": t.m,
        "n": t.n,
        "r": t.r,
        "k": t.k,
        "l": t.ell,
        # Decimal string: values outgrow 64-bit consumers at larger n.
        "delta": str(result.delta),
        "method": result.method.value,
        "elapsed_ms": round(result.elapsed * 1000, 3),
    }


def _parse_points(text: str, n: int) -> tuple[Fraction, ...]:
    try:
        points = tuple(Fraction(tok.strip()) for tok in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse sample points {text!r}: {exc}") from None
    if len(points) != n:
        raise ValueError(f"need exactly {n} sample points, got {len(points)}")
    return points


def _worker_count() -> int:
    raw = os.environ.get("SDPDEG_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def cmd_value(args: argparse.Namespace) -> int:
    try:
        triple = validate_triple(args.m, args.n, args.r)
        points = _parse_points(args.lambda_points, args.n) if args.lambda_points else None
    except (InvalidTripleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    try:
        result = delta(triple, method=args.method, cross_check=args.check, points=points)
    except CrossCheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(" ".join(f"{key}={val}" for key, val in _record(result).items()))
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    try:
        triples = valid_triples(args.n)
    except InvalidTripleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID

    def compute(t):
        return delta(t, method=args.method)

    try:
        workers = _worker_count()
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(compute, triples))
        else:
            results = [compute(t) for t in triples]
    except CrossCheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID

    if args.check_duality:
        by_key = {(res.triple.m, res.triple.r): res.delta for res in results}
        violations = []
        for res in results:
            partner = duality_partner(res.triple)
            other = by_key[(partner.m, partner.r)]
            if other != res.delta:
                violations.append(
                    f"duality violated: delta(m={res.triple.m}, n={args.n}, "
                    f"r={res.triple.r}) = {res.delta} but the partner "
                    f"(m={partner.m}, r={partner.r}) gives {other}"
                )
        if violations:
            for line in violations:
                print(line, file=sys.stderr)
            return EXIT_DISAGREEMENT

    records = [_record(res) for res in results]
    if args.format == "json":
        print(json.dumps(records, indent=2))
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(CSV_FIELDS)
        for rec in records:
            writer.writerow([rec[field] for field in CSV_FIELDS])
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failure: Union[str, None] = None
    all_ok = True
    for name in names:
        report = SUITES[name](seed=args.seed, max_n=args.max_n)
        print(f"{name}: {report.passed}/{report.total} passed")
        if not report.ok():
            all_ok = False
            if failure is None:
                failure = f"{name} counterexample:\n{report.first_failure}"
    if not all_ok:
        print(failure, file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sdpdeg",
        description=(
            "Exact algebraic degree of semidefinite programming. Ranks are "
            "restricted to 1 <= r <= n-1; m must lie in the Pataki window."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    methods = ("auto", "theorem1", "residue", "closed")

    value = sub.add_parser("value", help="compute delta(m, n, r)")
    value.add_argument("m", type=int)
    value.add_argument("n", type=int)
    value.add_argument("r", type=int)
    value.add_argument("--method", choices=methods, default="auto")
    value.add_argument(
        "--check", action="store_true",
        help="cross-check with a second independent method",
    )
    value.add_argument(
        "--lambda", dest="lambda_points", metavar="L1,...,LN",
        help="comma-separated distinct rationals for the residue method",
    )
    value.set_defaults(func=cmd_value)

    table = sub.add_parser("table", help="all valid (m, r) at a fixed n")
    table.add_argument("n", type=int)
    table.add_argument("--format", choices=("csv", "json"), default="csv")
    table.add_argument("--method", choices=methods, default="auto")
    table.add_argument(
        "--check-duality", action="store_true",
        help="verify the duality relation across the whole table",
    )
    table.set_defaults(func=cmd_table)

    verify = sub.add_parser("verify", help="run the self-verification suites")
    verify.add_argument(
        "--suite", choices=("all",) + tuple(SUITES), default="all"
    )
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument(
        "--max-n", dest="max_n", type=int, default=4,
        help="largest n for the cross-methods suite",
    )
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: Union[Sequence[str], None] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
