"""
Unit tests for the oracle data models
"""

import pytest

from ideal_divisors.cyclotomic import CyclotomicInteger
from ideal_divisors.oracle import (
    BOUNDED_EVIDENCE,
    OracleReport,
    SearchBudget,
    SearchOutcome,
    SearchResult,
)


def test_budget_defaults():
    """
    Default budget is support 3, bound 3
    """
    budget = SearchBudget()
    assert (budget.max_support, budget.coeff_bound) == (3, 3)
    assert budget.max_candidates == 2_000_000
    assert budget.to_dict() == {
        "maxSupport": 3,
        "coeffBound": 3,
        "maxCandidates": 2_000_000,
    }


@pytest.mark.parametrize(
    "args", [(0, 1, 1), (1, -1, 1), (1, 1, 0), (1.0, 1, 1), (True, 1, 1)]
)
def test_budget_invalid(args):
    """
    All limits must be positive integers
    """
    with pytest.raises(ValueError):
        SearchBudget(*args)


@pytest.mark.parametrize(
    "lam, support, bound, expected",
    [(5, 2, 2, 112), (3, 3, 3, 48), (23, 3, 1, 13288), (7, 3, 1, 232)],
)
def test_budget_space_size(lam, support, bound, expected):
    """
    Σ_s C(λ-1, s) (2b)^s
    """
    assert SearchBudget(support, bound).space_size(lam) == expected


def test_search_result_found(divisors_of_11):
    """
    A found generator is reported by its coefficients
    """
    generator = CyclotomicInteger(5, [-2, -1, 0, 0, 0])
    result = SearchResult(
        divisors_of_11[1],
        SearchOutcome.FOUND,
        generator,
        42,
        SearchBudget(2, 2, 100),
    )
    assert result.found
    assert result.to_dict() == {
        "divisor": {"q": 11, "f": 1, "xi": 9},
        "outcome": "found",
        "candidatesTested": 42,
        "generator": [-2, -1, 0, 0, 0],
        "budget": {"maxSupport": 2, "coeffBound": 2, "maxCandidates": 100},
    }
    assert "Generator: -2 - α" in str(result)


def test_search_result_not_found(divisors_of_19):
    """
    Absence is labelled as bounded evidence
    """
    result = SearchResult(divisors_of_19[0], SearchOutcome.EXHAUSTED)
    assert not result.found
    record = result.to_dict()
    assert record["generator"] is None
    assert record["evidence"] == BOUNDED_EVIDENCE
    assert "budget" not in record
    assert BOUNDED_EVIDENCE in str(result)


def test_search_result_inconsistent(divisors_of_19):
    """
    A generator is present exactly when the outcome is FOUND
    """
    with pytest.raises(AssertionError):
        SearchResult(divisors_of_19[0], SearchOutcome.FOUND)
    with pytest.raises(AssertionError):
        SearchResult(
            divisors_of_19[0],
            SearchOutcome.EXHAUSTED,
            CyclotomicInteger.constant(5, 19),
        )


def test_oracle_report_agree():
    """
    Untested records do not count as disagreement
    """
    report = OracleReport(
        origin="test", data=[{"agree": True}, {"agree": None}], context="c"
    )
    assert report.agree
    report.data.append({"agree": False})
    assert not report.agree
    assert "Origin: test" in str(report)
    assert OracleReport().data == []
