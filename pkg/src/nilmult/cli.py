"""Command-line front end.

Subcommands: ``compute`` (multiplier of a group, by formula, oracle, or both),
``witt`` (basic-commutator count), ``basis`` (enumerate basic commutators),
``sweep`` (cross-validate formula against oracle over a family of groups).

Exit codes: 0 success, 1 bad input, 2 formula/oracle mismatch, 3 enumeration
cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .abelian import CyclicDecomposition, InvariantFactors, canonicalize
from .hall import CapExceeded, enumerate_basic
from .multiplier import (
    MultiplierResult,
    decimal_str,
    multiplier_order,
    nilpotent_multiplier,
    tensor_oracle,
    verify,
)
from .witt import divisors, witt_count

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_MISMATCH = 2
EXIT_CAP = 3


class GroupSpecError(ValueError):
    """A group specification that does not match the accepted grammar."""


_SUMMAND = re.compile(r"Z(\d+)(?:\^(\d+))?")
_PLAIN_INT = re.compile(r"\d+")


def parse_group_spec(text: str) -> CyclicDecomposition:
    """Parse a group spec: "12,6,2", "Z12+Z6+Z2", or "Z2^3" (whitespace-free forms).

    Whitespace is ignored everywhere; anything outside the three spellings is
    rejected rather than guessed.
    """
    compact = "".join(text.split())
    if not compact:
        raise GroupSpecError("empty group specification")
    orders: list[int] = []
    if compact.startswith("Z"):
        for term in compact.split("+"):
            m = _SUMMAND.fullmatch(term)
            if not m:
                raise GroupSpecError(f"bad summand {term!r} in {text!r}")
            order = int(m.group(1))
            power = int(m.group(2)) if m.group(2) else 1
            if power < 1:
                raise GroupSpecError(f"power must be >= 1 in {term!r}")
            orders.extend([order] * power)
    else:
        for piece in compact.split(","):
            if not _PLAIN_INT.fullmatch(piece):
                raise GroupSpecError(f"bad order {piece!r} in {text!r}")
            orders.append(int(piece))
    return CyclicDecomposition(tuple(orders))


def format_group_spec(decomposition: CyclicDecomposition) -> str:
    """Comma-list rendering; parses back to the same decomposition."""
    return ",".join(str(r) for r in decomposition.orders)


def _output_record(
    decomposition: CyclicDecomposition,
    chain: InvariantFactors,
    nilpotency_class: int,
    method: str,
    result: MultiplierResult,
    verified: bool | None,
) -> dict:
    order_decimal, order_factored = multiplier_order(result)
    return {
        "schema_version": SCHEMA_VERSION,
        "input": list(decomposition.orders),
        "canonical": list(chain.chain),
        "class": nilpotency_class,
        "method": method,
        "summands": [
            {"order": order, "multiplicity": decimal_str(mult)}
            for order, mult in result.summands
        ],
        "order_factored": order_factored,
        "order_decimal": decimal_str(order_decimal) if order_decimal is not None else None,
        "verified": verified,
    }


def _print_record(record: dict, result: MultiplierResult, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(record, ensure_ascii=False))
        return
    print(f"input: {','.join(str(r) for r in record['input'])}")
    print(f"canonical: {','.join(str(n) for n in record['canonical'])}")
    print(f"class: {record['class']}")
    print(f"method: {record['method']}")
    print(f"multiplier: {result}")
    if record["order_decimal"] is not None and record["order_factored"]:
        print(f"order: {record['order_decimal']} = {record['order_factored']}")
    elif record["order_factored"]:
        print(f"order: {record['order_factored']}")
    else:
        print("order: 1")
    if record["verified"] is not None:
        print(f"verified: {'equal' if record['verified'] else 'MISMATCH'}")


def cmd_compute(args: argparse.Namespace) -> int:
    if args.class_c < 1:
        raise ValueError("--class must be >= 1")
    decomposition = parse_group_spec(args.group)
    chain = canonicalize(decomposition)
    verified: bool | None = None
    try:
        if args.method == "formula":
            result = nilpotent_multiplier(chain, args.class_c)
        elif args.method == "oracle":
            result = tensor_oracle(decomposition, args.class_c)
        else:
            report = verify(decomposition, args.class_c)
            result = report.formula
            verified = report.equal
            if not verified:
                print(
                    f"mismatch: formula={report.formula} oracle={report.oracle}",
                    file=sys.stderr,
                )
    except CapExceeded as exc:
        print(f"error: {exc}; rerun with --method formula", file=sys.stderr)
        return EXIT_CAP
    record = _output_record(
        decomposition, chain, args.class_c, args.method, result, verified
    )
    _print_record(record, result, args.format)
    return EXIT_OK if verified is not False else EXIT_MISMATCH


def cmd_witt(args: argparse.Namespace) -> int:
    print(decimal_str(witt_count(args.weight, args.letters)))
    return EXIT_OK


def cmd_basis(args: argparse.Namespace) -> int:
    for comm in enumerate_basic(args.weight, args.letters):
        print(comm.rendered)
    return EXIT_OK


def invariant_chains(max_order: int, max_rank: int):
    """All divisibility chains with entries in 2..max_order and length <= max_rank."""

    def extend(prefix: tuple[int, ...]):
        yield prefix
        if len(prefix) >= max_rank:
            return
        if prefix:
            candidates = [d for d in divisors(prefix[-1]) if d >= 2]
        else:
            candidates = list(range(2, max_order + 1))
        for n in candidates:
            yield from extend(prefix + (n,))

    yield from extend(())


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.max_order < 1:
        raise ValueError("--max-order must be >= 1")
    if args.max_rank < 0:
        raise ValueError("--max-rank must be >= 0")
    if args.max_class < 1:
        raise ValueError("--max-class must be >= 1")
    checked = 0
    mismatched = 0
    for chain in invariant_chains(args.max_order, args.max_rank):
        for c in range(1, args.max_class + 1):
            report = verify(CyclicDecomposition(chain), c)
            checked += 1
            if not report.equal:
                mismatched += 1
                print(
                    f"MISMATCH: chain={list(chain)} class={c} "
                    f"formula={report.formula} oracle={report.oracle}"
                )
    print(f"checked {checked} (chain, class) pairs: "
          f"{checked - mismatched} equal, {mismatched} mismatched")
    return EXIT_MISMATCH if mismatched else EXIT_OK


class _ArgumentParser(argparse.ArgumentParser):
    # usage problems are input errors (exit 1); argparse's default exit 2 is
    # reserved for verification mismatches
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="nilmult",
        description="Exact nilpotent Schur multipliers of finite abelian groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="multiplier of a group")
    compute.add_argument("--group", required=True,
                         help='e.g. "12,6,2", "Z12+Z6+Z2", or "Z2^3"')
    compute.add_argument("--class", dest="class_c", type=int, required=True,
                         help="nilpotency class c >= 1")
    compute.add_argument("--method", choices=("formula", "oracle", "both"),
                         default="formula")
    compute.add_argument("--format", choices=("text", "json"), default="text")
    compute.set_defaults(func=cmd_compute)

    witt = sub.add_parser("witt", help="count basic commutators")
    witt.add_argument("--weight", type=int, required=True)
    witt.add_argument("--letters", type=int, required=True)
    witt.set_defaults(func=cmd_witt)

    basis = sub.add_parser("basis", help="list basic commutators")
    basis.add_argument("--weight", type=int, required=True)
    basis.add_argument("--letters", type=int, required=True)
    basis.set_defaults(func=cmd_basis)

    sweep = sub.add_parser("sweep", help="cross-validate formula against oracle")
    sweep.add_argument("--max-order", type=int, required=True)
    sweep.add_argument("--max-rank", type=int, required=True)
    sweep.add_argument("--max-class", type=int, required=True)
    sweep.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
