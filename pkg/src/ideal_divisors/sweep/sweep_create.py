# pylint: disable=invalid-name

"""
Functions creating sweep tables.
"""

import logging

from sympy import primerange

from ideal_divisors.constants import LOGGER_NAME
from ideal_divisors.cyclotomic import (
    CyclotomicInteger,
    check_exponent,
    format_coefficients,
)
from ideal_divisors.divisors import decomposition_type, prime_divisors_of
from ideal_divisors.oracle import SearchBudget, SearchOutcome, search_generator
from ideal_divisors.sweep.sweep_model import NOT_FOUND, SweepTable

log = logging.getLogger(LOGGER_NAME)


def _summarise_outcomes(results):
    """Worst outcome of the searches over one prime"""
    outcomes = {result.outcome for result in results}
    for outcome in (SearchOutcome.BUDGET_EXCEEDED, SearchOutcome.EXHAUSTED):
        if outcome in outcomes:
            return outcome.value
    return SearchOutcome.FOUND.value


def create_sweeptable(lam, q_max, budget: SearchBudget = None) -> SweepTable:
    """
    Census of the ideal prime divisors of every prime q <= q_max

    For each q the decomposition (f, e), the canonical congruence
    assignment and the result of a generator search for every divisor
    are recorded. The divisor of λ is generated by 1 - α.

    :param lam: odd prime λ
    :param q_max: integer >= 2
    :param budget: SearchBudget, defaults used if None
    :return: SweepTable
    """
    check_exponent(lam)
    if isinstance(q_max, bool) or not isinstance(q_max, int) or q_max < 2:
        raise ValueError(f"q_max must be an integer >= 2, got {q_max!r}")
    if budget is None:
        budget = SearchBudget()

    primes, fs, es, kinds, us = [], [], [], [], []
    found, outcomes, generators = [], [], []
    for q in primerange(2, q_max + 1):
        q = int(q)
        f, e, kind = decomposition_type(q, lam)
        divisors = prime_divisors_of(q, lam)
        assert len(divisors) == e, f"{len(divisors)} divisors of {q}, e = {e}"

        if q == lam:
            one_minus_alpha = 1 - CyclotomicInteger.alpha_power(lam, 1)
            u = ""
            row_found = 1
            row_outcome = SearchOutcome.FOUND.value
            row_generators = format_coefficients(one_minus_alpha)
        else:
            u = ",".join(str(x) for x in divisors[0].assignment.u)
            results = [search_generator(P, budget) for P in divisors]
            row_found = sum(1 for result in results if result.found)
            row_outcome = _summarise_outcomes(results)
            row_generators = ";".join(
                format_coefficients(result.generator)
                if result.found
                else NOT_FOUND
                for result in results
            )

        log.info(
            "create_sweeptable: lambda=%d q=%d f=%d e=%d found %d/%d",
            lam,
            q,
            f,
            e,
            row_found,
            e,
        )
        primes.append(q)
        fs.append(f)
        es.append(e)
        kinds.append(kind)
        us.append(u)
        found.append(row_found)
        outcomes.append(row_outcome)
        generators.append(row_generators)

    return SweepTable.constructor(
        lam,
        q_max,
        primes,
        fs,
        es,
        kinds,
        us,
        found,
        outcomes,
        generators,
        budget=budget,
    )
