# pylint: disable=missing-module-docstring

from .period_create import (
    congruence_assignment,
    period_system,
    primitive_root,
)
from .period_functions import (
    evaluate_period_element,
    format_polynomial,
    period_element_norm,
    period_polynomial,
    period_product,
    represent_in_period_basis,
    shift_period_element,
    to_period_element,
)
from .period_model import CongruenceAssignment, PeriodElement, PeriodSystem

__all__ = [
    "PeriodSystem",
    "PeriodElement",
    "CongruenceAssignment",
    "primitive_root",
    "period_system",
    "congruence_assignment",
    "period_polynomial",
    "format_polynomial",
    "period_product",
    "to_period_element",
    "represent_in_period_basis",
    "evaluate_period_element",
    "shift_period_element",
    "period_element_norm",
]
