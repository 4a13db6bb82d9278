"""
Pytest Fixtures
"""

import numpy
import pytest

from ideal_divisors.divisors import prime_divisors_of
from ideal_divisors.oracle import SearchBudget
from ideal_divisors.sweep import create_sweeptable


@pytest.fixture(name="rng")
def rng_fixture():
    """
    Seeded random generator, fresh for every test
    """
    return numpy.random.default_rng(20260419)


@pytest.fixture(scope="package", name="small_budget")
def small_budget_fixture():
    """
    Support 2, bound 2: enough for the split primes of λ = 5
    """
    return SearchBudget(max_support=2, coeff_bound=2)


@pytest.fixture(scope="package", name="divisors_of_11")
def divisors_of_11_fixture():
    """
    The four divisors of 11 for λ = 5, ξ = 3, 9, 4, 5 in shift order
    """
    return prime_divisors_of(11, 5)


@pytest.fixture(scope="package", name="divisors_of_19")
def divisors_of_19_fixture():
    """
    The two divisors of 19 for λ = 5 (f = 2)
    """
    return prime_divisors_of(19, 5)


@pytest.fixture(scope="package", name="sweep_table")
def sweep_table_fixture(small_budget):
    """
    SweepTable for λ = 5 and primes up to 20
    """
    return create_sweeptable(5, 20, small_budget)
