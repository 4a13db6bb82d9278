"""
Data models for the brute-force oracles
"""

from enum import Enum
from math import comb

from ideal_divisors.constants import (
    DEFAULT_COEFF_BOUND,
    DEFAULT_MAX_CANDIDATES,
    DEFAULT_SUPPORT,
)

BOUNDED_EVIDENCE = "bounded evidence"


class SearchBudget:
    """
    Limits of a brute-force generator search

    Candidates have at most max_support nonzero canonical coefficients,
    each in [-coeff_bound, coeff_bound]; at most max_candidates are tested.

    Attributes:
        max_support: number of nonzero coefficients
        coeff_bound: bound on the absolute value of a coefficient
        max_candidates: cap on the number of candidates tested
    """

    def __init__(
        self,
        max_support=DEFAULT_SUPPORT,
        coeff_bound=DEFAULT_COEFF_BOUND,
        max_candidates=DEFAULT_MAX_CANDIDATES,
    ):
        for name, value in (
            ("max_support", max_support),
            ("coeff_bound", coeff_bound),
            ("max_candidates", max_candidates),
        ):
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValueError(f"{name} must be an integer, got {value!r}")
            if value <= 0:
                raise ValueError(f"{name} must be positive, got {value}")
        self.max_support = max_support
        self.coeff_bound = coeff_bound
        self.max_candidates = max_candidates

    def space_size(self, lam):
        """Number of candidates for the exponent lam

        Σ_s C(λ-1, s) (2b)^s over supports s = 1..max_support
        """
        n = lam - 1
        return sum(
            comb(n, s) * (2 * self.coeff_bound) ** s
            for s in range(1, min(self.max_support, n) + 1)
        )

    def to_dict(self):
        """JSON-ready description"""
        return {
            "maxSupport": self.max_support,
            "coeffBound": self.coeff_bound,
            "maxCandidates": self.max_candidates,
        }

    def __str__(self):
        return (
            f"SearchBudget(support={self.max_support}, "
            f"bound={self.coeff_bound}, cap={self.max_candidates})"
        )


class SearchOutcome(Enum):
    """How a generator search ended"""

    FOUND = "found"
    EXHAUSTED = "exhausted"
    BUDGET_EXCEEDED = "budget_exceeded"


class SearchResult:
    """
    Result of a generator search for one divisor

    Absence of a generator is bounded evidence of non-principality,
    never a proof.

    Attributes:
        divisor: IdealPrimeDivisor searched for
        outcome: SearchOutcome
        generator: CyclotomicInteger or None
        candidates_tested: number of candidates enumerated
        budget: SearchBudget used
    """

    # pylint: disable=too-many-arguments
    def __init__(
        self,
        divisor,
        outcome,
        generator=None,
        candidates_tested=0,
        budget=None,
    ):
        self.divisor = divisor
        self.outcome = outcome
        self.generator = generator
        self.candidates_tested = candidates_tested
        self.budget = budget
        assert (generator is not None) == (outcome == SearchOutcome.FOUND)

    @property
    def found(self):
        """True when a generator was found"""
        return self.outcome == SearchOutcome.FOUND

    def to_dict(self):
        """JSON-ready description"""
        record = {
            "divisor": self.divisor.to_dict(),
            "outcome": self.outcome.value,
            "candidatesTested": self.candidates_tested,
            "generator": (
                list(self.generator.coeffs)
                if self.generator is not None
                else None
            ),
        }
        if self.budget is not None:
            record["budget"] = self.budget.to_dict()
        if not self.found:
            record["evidence"] = BOUNDED_EVIDENCE
        return record

    def __str__(self):
        """Default printer for SearchResult"""
        s = "SearchResult:\n"
        s += f"\tDivisor: {self.divisor.label}\n"
        s += f"\tOutcome: {self.outcome.value}\n"
        s += f"\tCandidates tested: {self.candidates_tested}\n"
        if self.found:
            s += f"\tGenerator: {self.generator}\n"
        else:
            s += f"\tNo generator ({BOUNDED_EVIDENCE})\n"
        return s


class OracleReport:
    """Agreement report of the period test against exact division

    :param origin: str, name of the origin function
    :param data: list of dict records, one per divisor
    :param context: str, e.g. "lambda=5 q=11"
    """

    # pylint: disable=too-few-public-methods
    def __init__(self, origin=None, data=None, context=None):
        self.origin = origin
        self.data = data if data is not None else []
        self.context = context

    @property
    def agree(self):
        """False if any tested record disagrees"""
        return all(record["agree"] is not False for record in self.data)

    def __str__(self):
        """Default printer for OracleReport"""
        s = "Oracle report:\n"
        s += f"\tOrigin: {self.origin}\n"
        s += f"\tContext: {self.context}\n"
        s += "\tData:\n"
        for record in self.data:
            s += f"\t\t{record}\n"
        return s
