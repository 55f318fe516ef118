"""Exact nilpotent Schur multipliers of finite abelian groups.

Two independent computation routes — a closed form driven by Witt counts of
basic commutators, and an explicit basic-commutator/tensor oracle — plus the
machinery they stand on: invariant-factor canonicalization, Hall basis
enumeration, and exact necklace counting.
"""

from .abelian import (
    MAX_ORDER,
    CyclicDecomposition,
    InvariantFactors,
    canonicalize,
    canonicalize_primary,
    direct_sum,
    factorize,
    group_order,
    groups_isomorphic,
)
from .hall import (
    DEFAULT_ENUM_CAP,
    BasicCommutator,
    CapExceeded,
    bracket,
    enumerate_basic,
    enumeration_cap,
    leaf,
    parse_commutator,
)
from .multiplier import (
    MultiplierResult,
    VerificationReport,
    multiplier_order,
    nilpotent_multiplier,
    tensor_oracle,
    verify,
)
from .witt import WittTable, b_sequence, divisors, moebius, witt_count

__version__ = "0.1.0"

__all__ = [
    "MAX_ORDER",
    "CyclicDecomposition",
    "InvariantFactors",
    "canonicalize",
    "canonicalize_primary",
    "direct_sum",
    "factorize",
    "group_order",
    "groups_isomorphic",
    "DEFAULT_ENUM_CAP",
    "BasicCommutator",
    "CapExceeded",
    "bracket",
    "enumerate_basic",
    "enumeration_cap",
    "leaf",
    "parse_commutator",
    "MultiplierResult",
    "VerificationReport",
    "multiplier_order",
    "nilpotent_multiplier",
    "tensor_oracle",
    "verify",
    "WittTable",
    "b_sequence",
    "divisors",
    "moebius",
    "witt_count",
]
