#!/usr/bin/env python3
"""How the multiplier of a fixed group grows with the nilpotency class.

The multiplicities are Witt counts, so they grow like k^(c+1)/(c+1); this
script prints the compressed form and the order for each class, exercising
the exact big-integer path well past anything the enumeration oracle could
reach.

Usage: python scripts/multiplier_growth.py [--group 12,6,2] [--max-class 30]
"""

import argparse

from nilmult.cli import parse_group_spec
from nilmult.abelian import canonicalize
from nilmult.multiplier import multiplier_order, nilpotent_multiplier


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--group", default="12,6,2")
    parser.add_argument("--max-class", type=int, default=30)
    args = parser.parse_args()

    chain = canonicalize(parse_group_spec(args.group))
    print(f"group: {','.join(str(n) for n in chain)}")
    for c in range(1, args.max_class + 1):
        result = nilpotent_multiplier(chain, c)
        value, factored = multiplier_order(result)
        order = str(value) if value is not None else f"(factored) {factored}"
        print(f"c={c:<3} multiplier = {result}")
        print(f"      order = {order}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
