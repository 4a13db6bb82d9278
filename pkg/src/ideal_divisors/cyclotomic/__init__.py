# pylint: disable=missing-module-docstring

from .cyclo_functions import (
    add,
    canonicalize,
    conjugate,
    evaluate_mod,
    format_coefficients,
    mul,
    neg,
    norm,
    parse_coefficients,
)
from .cyclo_model import CyclotomicInteger, check_exponent

__all__ = [
    "CyclotomicInteger",
    "check_exponent",
    "canonicalize",
    "add",
    "neg",
    "mul",
    "conjugate",
    "norm",
    "evaluate_mod",
    "parse_coefficients",
    "format_coefficients",
]
