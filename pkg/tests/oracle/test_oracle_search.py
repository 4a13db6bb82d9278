"""
Unit tests for the generator searches and the divisibility oracle
"""

import logging

import pytest
from sympy import primerange

from ideal_divisors.constants import LOGGER_NAME
from ideal_divisors.cyclotomic import CyclotomicInteger, norm
from ideal_divisors.divisors import divides, prime_divisors_of, valuation
from ideal_divisors.oracle import (
    SearchBudget,
    SearchOutcome,
    brute_force_divisor_check,
    enumerate_candidates,
    exact_divide,
    search_generator,
    search_period_decomposition,
)
from ideal_divisors.periods import (
    congruence_assignment,
    evaluate_period_element,
    period_element_norm,
    period_system,
)

from ..utils import random_cyclotomic


def test_enumerate_candidates_order():
    """
    Support first, then largest coefficient, then positions
    """
    candidates = list(enumerate_candidates(5, SearchBudget(1, 2)))
    assert [c.coeffs for c in candidates[:4]] == [
        (-1, 0, 0, 0, 0),
        (1, 0, 0, 0, 0),
        (0, -1, 0, 0, 0),
        (0, 1, 0, 0, 0),
    ]
    assert candidates[8].coeffs == (-2, 0, 0, 0, 0)
    assert len(candidates) == 16


@pytest.mark.parametrize(
    "lam, support, bound", [(5, 2, 2), (3, 3, 3), (7, 3, 1)]
)
def test_enumerate_candidates_count(lam, support, bound):
    """
    Enumeration covers exactly the counted space, without repeats
    """
    budget = SearchBudget(support, bound)
    candidates = list(enumerate_candidates(lam, budget))
    assert len(candidates) == budget.space_size(lam)
    assert len(set(candidates)) == len(candidates)
    assert all(c.support <= support for c in candidates)


def test_search_generator_first_found(divisors_of_11, small_budget):
    """
    -2 - α is the first generator of the ξ = 9 divisor
    """
    result = search_generator(divisors_of_11[1], small_budget)
    assert result.outcome == SearchOutcome.FOUND
    assert result.generator == CyclotomicInteger(5, [-2, -1, 0, 0, 0])
    assert result.candidates_tested == 42


def test_search_generator_split_5(divisors_of_11, small_budget):
    """
    Every divisor of 11 and 31 is generated within support 2, bound 2
    """
    for P in divisors_of_11 + prime_divisors_of(31, 5):
        result = search_generator(P, small_budget)
        assert result.found
        h = result.generator
        assert abs(norm(h)) == P.q
        assert divides(P, h)
        assert valuation(P, h) == 1


def test_search_generator_inert():
    """
    An inert prime generates its own divisor
    """
    (P,) = prime_divisors_of(2, 5)
    result = search_generator(P, SearchBudget(1, 2))
    assert result.found
    assert result.generator == 2
    assert result.candidates_tested == 1


def test_search_generator_lambda():
    """
    The divisor of λ is not searched for
    """
    with pytest.raises(ValueError):
        search_generator(prime_divisors_of(5, 5)[0], SearchBudget())


@pytest.mark.parametrize(
    "lam, q, support, bound",
    [
        (3, 7, 2, 2),
        (3, 13, 3, 3),
        (3, 19, 3, 3),
        (7, 2, 3, 1),
        (7, 43, 2, 2),
    ],
)
def test_search_generator_found(lam, q, support, bound):
    """
    Small class number one cases
    """
    for P in prime_divisors_of(q, lam):
        result = search_generator(P, SearchBudget(support, bound))
        assert result.found, P.label
        assert abs(norm(result.generator)) == q**P.f


def test_search_generator_exhausted():
    """
    Generators of 31 for λ = 3 need coefficients beyond 3
    """
    P = prime_divisors_of(31, 3)[0]
    result = search_generator(P, SearchBudget(3, 3))
    assert result.outcome == SearchOutcome.EXHAUSTED
    assert result.generator is None
    assert result.candidates_tested == 48
    assert result.to_dict()["evidence"] == "bounded evidence"


def test_search_generator_budget_exceeded(divisors_of_11, caplog):
    """
    Hitting the cap is not the same as exhausting the space
    """
    budget = SearchBudget(2, 2, max_candidates=10)
    with caplog.at_level(logging.WARNING, logger=LOGGER_NAME):
        result = search_generator(divisors_of_11[1], budget)
    assert result.outcome == SearchOutcome.BUDGET_EXCEEDED
    assert result.candidates_tested == 10
    assert "exceed the cap" in caplog.text


@pytest.mark.slow
def test_search_generator_lambda_23():
    """
    No divisor of 47 for λ = 23 is generated within support 3, bound 1
    """
    P = prime_divisors_of(47, 23)[0]
    result = search_generator(P, SearchBudget(3, 1))
    assert result.outcome == SearchOutcome.EXHAUSTED
    assert result.candidates_tested == 13288


@pytest.mark.slow
@pytest.mark.parametrize(
    "lam, unfound",
    [(3, {31, 37, 43}), (5, {19, 29}), (7, {11, 23, 37})],
)
def test_search_generator_census(lam, unfound):
    """
    Every divisor of every prime below 50 at support 3, bound 3:
    the listed primes exhaust the space, all others are generated
    """
    budget = SearchBudget(3, 3)
    for q in primerange(2, 50):
        if q == lam:
            continue
        for P in prime_divisors_of(int(q), lam):
            result = search_generator(P, budget)
            if q in unfound:
                assert result.outcome == SearchOutcome.EXHAUSTED, P.label
                assert result.candidates_tested == budget.space_size(lam)
            else:
                assert result.outcome == SearchOutcome.FOUND, P.label
                h = result.generator
                assert abs(norm(h)) == q**P.f
                assert valuation(P, h) == 1


@pytest.mark.parametrize(
    "lam, q, budget",
    [(5, 11, SearchBudget(2, 2)), (7, 43, SearchBudget(2, 2))],
)
def test_generator_detects_divisibility(rng, lam, q, budget):
    """
    With a generator h of P, P divides g iff h divides g exactly
    """
    for P in prime_divisors_of(q, lam):
        h = search_generator(P, budget).generator
        for i in range(100):
            g = random_cyclotomic(rng, lam)
            if i % 5 == 0:
                g = g * h
            assert divides(P, g) == (exact_divide(g, h) is not None)


def test_search_period_decomposition_partial():
    """
    19 = -(-3 η_0 + η_1)(-3 η_1 + η_0) in the period ring of λ = 5
    """
    ps = period_system(5, 19)
    assignment = congruence_assignment(ps)
    factors = search_period_decomposition(19, 5, SearchBudget(1, 3))
    assert len(factors) == 2
    for s, phi in enumerate(factors):
        assert abs(period_element_norm(phi, ps)) == 19
        assert evaluate_period_element(phi, assignment, s) == 0
    assert {phi.coords for phi in factors} == {(-3, 1), (1, -3)}


def test_search_period_decomposition_not_found():
    """
    Coordinates up to 2 are too small for 19
    """
    assert search_period_decomposition(19, 5, SearchBudget(1, 2)) is None


def test_search_period_decomposition_inert():
    """
    e = 1: q itself
    """
    (phi,) = search_period_decomposition(2, 5, SearchBudget())
    assert phi.coords == (-2,)


def test_brute_force_divisor_check_split(small_budget):
    """
    Only the ξ = 9 divisor of 11 divides 2 + α; all generators agree
    """
    g = CyclotomicInteger(5, [2, 1, 0, 0, 0])
    report = brute_force_divisor_check(11, 5, g, small_budget)
    assert report.agree
    assert report.origin == "brute_force_divisor_check"
    assert [r["divides"] for r in report.data] == [False, True, False, False]
    assert [r["valuation"] for r in report.data] == [0, 1, 0, 0]
    assert all(r["tested"] for r in report.data)
    assert [r["oracleValuation"] for r in report.data] == [0, 1, 0, 0]
    assert report.data[1]["generator"] == [-2, -1, 0, 0, 0]


def test_brute_force_divisor_check_q(small_budget):
    """
    q is divisible once by each of its divisors
    """
    g = CyclotomicInteger.constant(5, 19)
    report = brute_force_divisor_check(19, 5, g, small_budget)
    assert report.agree
    assert [r["divides"] for r in report.data] == [True, True]
    assert [r["valuation"] for r in report.data] == [1, 1]


def test_brute_force_divisor_check_unit(small_budget):
    """
    Units are divisible by nothing
    """
    g = CyclotomicInteger.constant(5, 1)
    report = brute_force_divisor_check(11, 5, g, small_budget)
    assert report.agree
    assert not any(r["divides"] for r in report.data)


def test_brute_force_divisor_check_zero(small_budget):
    """
    Zero is divisible by everything and has no valuation
    """
    report = brute_force_divisor_check(
        11, 5, CyclotomicInteger.constant(5, 0), small_budget
    )
    assert report.agree
    assert all(r["divides"] and r["oracleDivides"] for r in report.data)
    assert all(r["valuation"] is None for r in report.data)


def test_brute_force_divisor_check_lambda():
    """
    q = λ is handled by the divisor of 1 - α
    """
    with pytest.raises(ValueError):
        brute_force_divisor_check(5, 5, CyclotomicInteger.constant(5, 1))
