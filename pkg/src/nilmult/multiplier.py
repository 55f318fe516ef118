"""Nilpotent Schur multipliers of finite abelian groups, two independent ways.

``nilpotent_multiplier`` evaluates the closed form: for a group with invariant
factors n_1, ..., n_k and class c, the multiplier is the direct sum over
i = 2..k of (b_i - b_{i-1}) copies of Z_{n_i}, where b_i counts basic
commutators of weight c+1 on i letters.

``tensor_oracle`` recomputes the same group from first principles: it
enumerates the basic commutators of weight c+1 on the given cyclic factors,
maps each to the cyclic group of order gcd(orders of its letters), and
canonicalizes the accumulated multiset.  ``verify`` runs both and compares.
"""

from __future__ import annotations

import math
import sys
from collections import Counter
from dataclasses import dataclass
from typing import Mapping

from .abelian import CyclicDecomposition, InvariantFactors, canonicalize, factorize
from .hall import enumerate_basic
from .witt import b_sequence

# Exact decimal expansions are reported only up to this many digits; beyond
# it, only the factored form is rendered.
DIGIT_LIMIT = 10**4


def decimal_str(value: int) -> str:
    """str(value) with the interpreter's int-to-str digit limit lifted as needed."""
    if hasattr(sys, "get_int_max_str_digits"):
        needed = value.bit_length() // 3 + 4
        if needed > sys.get_int_max_str_digits():
            sys.set_int_max_str_digits(needed)
    return str(value)


@dataclass(frozen=True)
class MultiplierResult:
    """A finite abelian group in compressed invariant-factor form.

    ``summands`` lists (order, multiplicity) pairs with strictly decreasing
    orders, each dividing its predecessor; multiplicities are exact integers
    and can be astronomically large.  The empty tuple is the trivial group.
    """

    summands: tuple[tuple[int, int], ...]
    nilpotency_class: int
    group: InvariantFactors

    def __post_init__(self) -> None:
        previous = None
        for order, multiplicity in self.summands:
            if order < 2:
                raise ValueError(f"summand order must be >= 2, got {order}")
            if multiplicity < 1:
                raise ValueError(f"summand multiplicity must be >= 1, got {multiplicity}")
            if previous is not None and (previous <= order or previous % order):
                raise ValueError(
                    f"summand orders must strictly decrease along a divisibility "
                    f"chain; got {previous} then {order}"
                )
            previous = order

    @property
    def is_trivial(self) -> bool:
        return not self.summands

    def __str__(self) -> str:
        if not self.summands:
            return "trivial"
        return " (+) ".join(
            f"Z{order}" if mult == 1 else f"Z{order}^({decimal_str(mult)})"
            for order, mult in self.summands
        )


def nilpotent_multiplier(group: InvariantFactors, nilpotency_class: int) -> MultiplierResult:
    """Closed-form multiplier of the group for the given nilpotency class.

    >>> str(nilpotent_multiplier(InvariantFactors((12, 6, 2)), 1))
    'Z6 (+) Z2^(2)'
    """
    if nilpotency_class < 1:
        raise ValueError(f"nilpotency class must be >= 1, got {nilpotency_class}")
    chain = group.chain
    if len(chain) <= 1:
        return MultiplierResult((), nilpotency_class, group)
    counts = b_sequence(nilpotency_class, len(chain)).counts
    summands: list[list[int]] = []
    for i in range(2, len(chain) + 1):
        order = chain[i - 1]
        multiplicity = counts[i - 1] - counts[i - 2]
        if multiplicity == 0 or order == 1:
            continue
        if summands and summands[-1][0] == order:
            summands[-1][1] += multiplicity
        else:
            summands.append([order, multiplicity])
    return MultiplierResult(
        tuple((order, mult) for order, mult in summands), nilpotency_class, group
    )


def tensor_oracle(
    decomposition: CyclicDecomposition, nilpotency_class: int, cap: int | None = None
) -> MultiplierResult:
    """Multiplier recomputed from the basic commutators themselves.

    Works on any decomposition, canonical or not; each basic commutator of
    weight class+1 on the t factors contributes the cyclic group of order
    gcd of the orders of its distinct letters (repeats cannot change a gcd).
    Raises ``CapExceeded`` when the enumeration would be too large, in which
    case ``nilpotent_multiplier`` is the way to go.
    """
    if nilpotency_class < 1:
        raise ValueError(f"nilpotency class must be >= 1, got {nilpotency_class}")
    source = canonicalize(decomposition)
    orders = decomposition.orders
    if not orders:
        return MultiplierResult((), nilpotency_class, source)
    occurring: Counter[int] = Counter()
    for comm in enumerate_basic(nilpotency_class + 1, len(orders), cap=cap):
        g = math.gcd(*(orders[i - 1] for i in comm.distinct_letters()))
        if g > 1:
            occurring[g] += 1
    return MultiplierResult(
        _compressed_invariant_form(occurring), nilpotency_class, source
    )


def _compressed_invariant_form(multiset: Mapping[int, int]) -> tuple[tuple[int, int], ...]:
    """Canonicalize a multiset {cyclic order: multiplicity} without expanding it.

    Each distinct order is factored once; per prime, exponent runs are merged
    and swept from the largest down, so multiplicities stay run-length encoded
    throughout.
    """
    exponent_runs: dict[int, list[list[int]]] = {}
    for order, multiplicity in multiset.items():
        if order < 2 or multiplicity < 1:
            raise ValueError(f"bad multiset entry {order}: {multiplicity}")
        for p, e in factorize(order).items():
            exponent_runs.setdefault(p, []).append([e, multiplicity])
    runs: dict[int, list[list[int]]] = {}
    for p, pairs in exponent_runs.items():
        pairs.sort(reverse=True)
        merged: list[list[int]] = []
        for e, m in pairs:
            if merged and merged[-1][0] == e:
                merged[-1][1] += m
            else:
                merged.append([e, m])
        runs[p] = merged
    summands: list[tuple[int, int]] = []
    while runs:
        factor = math.prod(p ** pairs[0][0] for p, pairs in runs.items())
        step = min(pairs[0][1] for pairs in runs.values())
        summands.append((factor, step))
        for p in list(runs):
            head = runs[p][0]
            head[1] -= step
            if head[1] == 0:
                runs[p].pop(0)
                if not runs[p]:
                    del runs[p]
    return tuple(summands)


def multiplier_order(result: MultiplierResult) -> tuple[int | None, str]:
    """Order of the multiplier: (exact integer or None, factored rendering).

    The integer is computed whenever its decimal expansion fits in
    ``DIGIT_LIMIT`` digits, else None; the factored string is always produced
    ("" for the trivial group).

    >>> m = nilpotent_multiplier(InvariantFactors((12, 6, 2)), 1)
    >>> multiplier_order(m)
    (24, '6^1 · 2^2')
    """
    factored = " · ".join(
        f"{order}^{decimal_str(mult)}" for order, mult in result.summands
    )
    # bit_length overestimates log2 by at most a factor of two for n >= 2, so
    # anything within the digit limit lands under this bound.
    bits_upper = sum(mult * order.bit_length() for order, mult in result.summands)
    if bits_upper > 8 * DIGIT_LIMIT:
        return None, factored
    value = 1
    for order, mult in result.summands:
        value *= order**mult
    if len(decimal_str(value)) > DIGIT_LIMIT:
        return None, factored
    return value, factored


@dataclass(frozen=True)
class VerificationReport:
    """Both computation routes for one input, plus the equality verdict."""

    formula: MultiplierResult
    oracle: MultiplierResult
    equal: bool


def verify(
    decomposition: CyclicDecomposition, nilpotency_class: int, cap: int | None = None
) -> VerificationReport:
    """Run the closed form and the commutator oracle and compare them.

    The verdict is expected to be equal on every valid input; anything else
    means an implementation bug, not a property of the input.
    """
    formula = nilpotent_multiplier(canonicalize(decomposition), nilpotency_class)
    oracle = tensor_oracle(decomposition, nilpotency_class, cap=cap)
    return VerificationReport(formula, oracle, formula == oracle)
