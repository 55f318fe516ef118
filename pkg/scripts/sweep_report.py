#!/usr/bin/env python3
"""Desk-scale cross-validation run: formula vs oracle over a chain family.

Prints the table of basic-commutator counts that drives the closed form, then
verifies every invariant chain within the bounds against the enumeration
oracle and reports totals and timing.

Usage: python scripts/sweep_report.py [--max-order 16] [--max-rank 3] [--max-class 4]
"""

import argparse
import time

from nilmult.abelian import CyclicDecomposition
from nilmult.cli import invariant_chains
from nilmult.multiplier import verify
from nilmult.witt import witt_count


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-order", type=int, default=16)
    parser.add_argument("--max-rank", type=int, default=3)
    parser.add_argument("--max-class", type=int, default=4)
    args = parser.parse_args()

    print("basic commutators of weight c+1 on k letters:")
    header = "  c \\ k " + "".join(f"{k:>8}" for k in range(1, 7))
    print(header)
    for c in range(1, args.max_class + 1):
        row = "".join(f"{witt_count(c + 1, k):>8}" for k in range(1, 7))
        print(f"  {c:>5} {row}")
    print()

    chains = list(invariant_chains(args.max_order, args.max_rank))
    start = time.perf_counter()
    checked = mismatched = 0
    largest = ((), 0, "trivial")
    for chain in chains:
        for c in range(1, args.max_class + 1):
            report = verify(CyclicDecomposition(chain), c)
            checked += 1
            if not report.equal:
                mismatched += 1
                print(f"MISMATCH chain={list(chain)} class={c}: "
                      f"formula={report.formula} oracle={report.oracle}")
            total = sum(m for _, m in report.formula.summands)
            if total > largest[1]:
                largest = (chain, total, str(report.formula))
    elapsed = time.perf_counter() - start

    print(f"{len(chains)} chains x {args.max_class} classes: "
          f"{checked} cases, {mismatched} mismatches, {elapsed:.2f}s")
    chain, total, rendered = largest
    print(f"largest multiplier seen: chain={list(chain)} "
          f"({total} cyclic summands): {rendered}")
    return 1 if mismatched else 0


if __name__ == "__main__":
    raise SystemExit(main())
