# pylint: disable=missing-module-docstring

from .oracle_division import exact_divide, norm_via_resultant
from .oracle_model import (
    BOUNDED_EVIDENCE,
    OracleReport,
    SearchBudget,
    SearchOutcome,
    SearchResult,
)
from .oracle_search import (
    brute_force_divisor_check,
    enumerate_candidates,
    search_generator,
    search_period_decomposition,
)

__all__ = [
    "BOUNDED_EVIDENCE",
    "SearchBudget",
    "SearchOutcome",
    "SearchResult",
    "OracleReport",
    "exact_divide",
    "norm_via_resultant",
    "enumerate_candidates",
    "search_generator",
    "search_period_decomposition",
    "brute_force_divisor_check",
]
