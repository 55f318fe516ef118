"""Finite abelian groups as direct sums of cyclic groups, in exact arithmetic.

A group arrives as a multiset of cyclic orders (``CyclicDecomposition``) and
is normalized to its invariant-factor chain (``InvariantFactors``): the unique
list n_1, n_2, ... with n_{i+1} | n_i and every entry >= 2.  Two independent
normalization routes are provided; ``canonicalize`` (lcm/gcd fixpoint, no
factorization) is the default and ``canonicalize_primary`` (primary
decomposition) is its cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Largest accepted cyclic order.  Any n <= 10**12 has at most one prime factor
# above 10**6, so trial division up to sqrt(n) fully factors every input.
MAX_ORDER = 10**12


@dataclass(frozen=True)
class CyclicDecomposition:
    """A direct sum of cyclic groups, one entry per factor, in given order.

    Entries may repeat, appear in any order, and include 1 (trivial factors).
    The empty decomposition is the trivial group.

    >>> CyclicDecomposition((8, 12)).orders
    (8, 12)
    """

    orders: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "orders", tuple(self.orders))
        for r in self.orders:
            if r < 1:
                raise ValueError(f"cyclic order must be >= 1, got {r}")
            if r > MAX_ORDER:
                raise ValueError(f"cyclic order {r} exceeds the bound {MAX_ORDER}")

    def __iter__(self):
        return iter(self.orders)

    def __len__(self) -> int:
        return len(self.orders)


@dataclass(frozen=True)
class InvariantFactors:
    """Canonical presentation: a divisibility chain n_1, n_2 | n_1, ..., all >= 2.

    Entries are not bounded by ``MAX_ORDER``: the lcm of several admissible
    orders may exceed it, and nothing here ever needs to factor a chain entry.

    >>> InvariantFactors((24, 4)).chain
    (24, 4)
    """

    chain: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "chain", tuple(self.chain))
        for n in self.chain:
            if n < 2:
                raise ValueError(f"invariant factor must be >= 2, got {n}")
        for a, b in zip(self.chain, self.chain[1:]):
            if a % b:
                raise ValueError(f"broken divisibility chain: {b} does not divide {a}")

    def __iter__(self):
        return iter(self.chain)

    def __len__(self) -> int:
        return len(self.chain)


def canonicalize(decomposition: CyclicDecomposition) -> InvariantFactors:
    """Invariant factors of the group, by the lcm/gcd pairwise fixpoint.

    Any pair violating divisibility is replaced by (lcm, gcd) until stable;
    the multiset's product is preserved at every step and no factorization is
    needed.  Trivial factors are dropped.

    >>> canonicalize(CyclicDecomposition((8, 12))).chain
    (24, 4)
    >>> canonicalize(CyclicDecomposition((1, 1, 1))).chain
    ()
    """
    entries = sorted((r for r in decomposition.orders if r > 1), reverse=True)
    changed = True
    while changed:
        changed = False
        for i in range(len(entries)):
            for j in range(i + 1, len(entries)):
                a, b = entries[i], entries[j]
                if a % b:
                    g = math.gcd(a, b)
                    entries[i], entries[j] = a // g * b, g
                    changed = True
    return InvariantFactors(tuple(e for e in entries if e > 1))


def canonicalize_primary(decomposition: CyclicDecomposition) -> InvariantFactors:
    """Invariant factors via primary decomposition; cross-check for ``canonicalize``.

    Each order is factored once; per prime, exponents are sorted descending
    and the i-th invariant factor collects every prime's i-th largest power.
    """
    exponents: dict[int, list[int]] = {}
    for r in decomposition.orders:
        for p, e in factorize(r).items():
            exponents.setdefault(p, []).append(e)
    for exps in exponents.values():
        exps.sort(reverse=True)
    length = max((len(exps) for exps in exponents.values()), default=0)
    chain = []
    for i in range(length):
        n = 1
        for p, exps in exponents.items():
            if i < len(exps):
                n *= p ** exps[i]
        chain.append(n)
    return InvariantFactors(tuple(chain))


def factorize(n: int) -> dict[int, int]:
    """Prime factorization {p: e} by trial division, for 1 <= n <= MAX_ORDER.

    >>> factorize(360)
    {2: 3, 3: 2, 5: 1}
    """
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"can only factor integers in [1, {MAX_ORDER}], got {n}")
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    d = 5
    while d * d <= n:
        for p in (d, d + 2):
            while n % p == 0:
                factors[p] = factors.get(p, 0) + 1
                n //= p
        d += 6
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def group_order(factors: InvariantFactors) -> int:
    """Order of the group: the product of the chain; 1 for the trivial group."""
    return math.prod(factors.chain)


def direct_sum(a: CyclicDecomposition, b: CyclicDecomposition) -> CyclicDecomposition:
    """Concatenate two decompositions (direct sum of the groups)."""
    return CyclicDecomposition(a.orders + b.orders)


def groups_isomorphic(a: CyclicDecomposition, b: CyclicDecomposition) -> bool:
    """True iff both decompositions present isomorphic groups.

    >>> groups_isomorphic(CyclicDecomposition((2, 3)), CyclicDecomposition((6,)))
    True
    """
    return canonicalize(a) == canonicalize(b)
