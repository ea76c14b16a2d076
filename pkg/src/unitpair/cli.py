"""Command line interface: solve, oracle, verify, certify, search.

Exit codes: 0 ok, 1 verification false, 2 invalid input,
3 unsupported magnitude / factorization out of range, 4 certification mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .errors import FactorizationOutOfRange, UnsupportedMagnitude, ValidationError
from .instances import SearchQuery, find_pairs
from .oracle import build_instance, certify, enumerate_all
from .solver import Solution, SolutionSet, solve, validate_pair, verify_solution

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INVALID = 2
EXIT_MAGNITUDE = 3
EXIT_MISMATCH = 4


def output_record(s: Solution) -> dict:
    return {
        "a": str(s.a),
        "b": str(s.b),
        "provenance": str(s.provenance),
        "k": None if s.k is None else str(s.k),
    }


def render(solutions: SolutionSet, fmt: str, p=None, q=None, num=None, den=None) -> str:
    records = [output_record(s) for s in solutions]
    if fmt == "json":
        doc = {
            "p": None if p is None else str(p),
            "q": None if q is None else str(q),
            "target": {"num": str(num), "den": str(den)},
            "solutions": records,
        }
        return json.dumps(doc, indent=2)
    lines = [
        "\t".join((r["a"], r["b"], r["provenance"], "-" if r["k"] is None else r["k"]))
        for r in records
    ]
    return "\n".join(lines)


def _emit(text: str) -> None:
    if text:
        print(text)


def parse_factors(text: str) -> list[tuple[int, int]]:
    """Parse ``"2^1,1009^1"`` (exponent defaults to 1)."""
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        base, _, exp = chunk.partition("^")
        try:
            out.append((int(base), int(exp) if exp else 1))
        except ValueError:
            raise ValidationError(f"bad factor {chunk!r}, expected prime^exponent") from None
    return out


def cmd_solve(args) -> int:
    pair = validate_pair(args.p, args.q)
    full = solve(pair)
    if not args.no_certify:
        report = certify(pair, full)
        if not report.match:
            print(f"certification failed: {report}", file=sys.stderr)
            return EXIT_MISMATCH
    result = full.positive() if args.positive_only else full
    _emit(render(result, args.format, pair.p, pair.q, pair.q_plus_1, pair.pq))
    return EXIT_OK


def cmd_oracle(args) -> int:
    factors = parse_factors(args.factors) if args.factors else None
    inst = build_instance(args.num, args.den, factors)
    result = enumerate_all(inst)
    _emit(render(result, args.format, num=inst.n, den=inst.d))
    return EXIT_OK


def cmd_verify(args) -> int:
    pair = validate_pair(args.p, args.q)
    for name, value in (("a", args.a), ("b", args.b)):
        if value == 0:
            print(f"{name} must be nonzero", file=sys.stderr)
            return EXIT_FALSE
    lhs = pair.pq * (args.a + args.b)
    rhs = pair.q_plus_1 * args.a * args.b
    ok = verify_solution(pair, args.a, args.b)
    print(f"pq(a+b) = {lhs}")
    print(f"(q+1)ab = {rhs}")
    print("true" if ok else "false")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_certify(args) -> int:
    pair = validate_pair(args.p, args.q)
    report = certify(pair, solve(pair))
    print(report)
    return EXIT_OK if report.match else EXIT_MISMATCH


def cmd_search(args) -> int:
    query = SearchQuery(args.q, args.min, args.max, args.limit)
    for pair in find_pairs(query):
        print(f"{pair.p} {pair.q}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unitpair",
        description="Integer solutions of 1/a + 1/b = (q+1)/(pq) for primes p, q with q+1 | p-1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("tsv", "json"), default="tsv")

    sp = sub.add_parser("solve", parents=[fmt], help="closed-form solution set")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--positive-only", action="store_true")
    sp.add_argument("--no-certify", action="store_true", help="skip the oracle cross-check")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("oracle", parents=[fmt], help="brute-force divisor walk for n/d")
    sp.add_argument("--num", type=int, required=True)
    sp.add_argument("--den", type=int, required=True)
    sp.add_argument("--factors", help="factorization of den, e.g. 2^1,1009^1")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("verify", help="check pq(a+b) = (q+1)ab")
    for name in ("p", "q", "a", "b"):
        sp.add_argument(f"--{name}", type=int, required=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("certify", help="compare closed form and oracle")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("search", help="list valid p for a prime q")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--min", type=int, required=True)
    sp.add_argument("--max", type=int, required=True)
    sp.add_argument("--limit", type=int, default=1000)
    sp.set_defaults(func=cmd_search)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UnsupportedMagnitude, FactorizationOutOfRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MAGNITUDE
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
