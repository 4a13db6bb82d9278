# pylint: disable=missing-module-docstring

from .divisor_functions import (
    conjugate_divisor,
    decomposition_type,
    divides,
    divides_def1,
    factor,
    prime_divisors_of,
    psi_multiplier,
    valuation,
)
from .divisor_model import (
    DivisorFactorization,
    DivisorKind,
    IdealPrimeDivisor,
)

__all__ = [
    "DivisorKind",
    "IdealPrimeDivisor",
    "DivisorFactorization",
    "prime_divisors_of",
    "decomposition_type",
    "conjugate_divisor",
    "divides",
    "divides_def1",
    "psi_multiplier",
    "valuation",
    "factor",
]
