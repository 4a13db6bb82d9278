# pylint: disable=invalid-name

"""
Bounded brute-force searches for actual generators of ideal divisors
and the oracle comparing the period test with exact division.
"""

import logging
from itertools import combinations, product

from sympy import multiplicity

from ideal_divisors.constants import LOGGER_NAME
from ideal_divisors.cyclotomic import CyclotomicInteger, norm
from ideal_divisors.divisors import (
    DivisorKind,
    IdealPrimeDivisor,
    divides,
    prime_divisors_of,
    valuation,
)
from ideal_divisors.oracle.oracle_division import exact_divide
from ideal_divisors.oracle.oracle_model import (
    OracleReport,
    SearchBudget,
    SearchOutcome,
    SearchResult,
)
from ideal_divisors.periods import (
    PeriodElement,
    congruence_assignment,
    evaluate_period_element,
    period_element_norm,
    period_system,
    shift_period_element,
)

log = logging.getLogger(LOGGER_NAME)


def _values_with_max(size, m):
    """Tuples of nonzero integers in [-m, m] whose largest |value| is m"""
    choices = [v for v in range(-m, m + 1) if v]
    for values in product(choices, repeat=size):
        if max(abs(v) for v in values) == m:
            yield values


def enumerate_candidates(lam, budget: SearchBudget):
    """
    Candidates in search order: by support, then by largest |coefficient|,
    then lexicographically by positions and values

    :param lam: odd prime λ
    :param budget: SearchBudget
    :return: generator of CyclotomicInteger
    """
    n = lam - 1
    for support in range(1, min(budget.max_support, n) + 1):
        for m in range(1, budget.coeff_bound + 1):
            for positions in combinations(range(n), support):
                for values in _values_with_max(support, m):
                    coeffs = [0] * lam
                    for i, v in zip(positions, values):
                        coeffs[i] = v
                    yield CyclotomicInteger.from_canonical(lam, coeffs)


def search_generator(P: IdealPrimeDivisor, budget: SearchBudget):
    """
    Look for an actual element h with |norm(h)| = q^f and valuation 1
    at P, i.e. an element whose only divisor is P

    An inert q is its own generator. Not finding one is bounded
    evidence that P is not principal, never a proof.

    :param P: GENERAL IdealPrimeDivisor
    :param budget: SearchBudget
    :return: SearchResult
    """
    if P.kind != DivisorKind.GENERAL:
        raise ValueError(f"{P.label}: the divisor of λ is generated by 1 - α")

    if P.e == 1:
        return SearchResult(
            P,
            SearchOutcome.FOUND,
            CyclotomicInteger.constant(P.lam, P.q),
            candidates_tested=1,
            budget=budget,
        )

    space = budget.space_size(P.lam)
    if space > budget.max_candidates:
        log.warning(
            "search_generator: %d candidates for %s exceed the cap %d",
            space,
            P.label,
            budget.max_candidates,
        )

    target = P.q**P.f
    tested = 0
    for h in enumerate_candidates(P.lam, budget):
        if tested >= budget.max_candidates:
            log.info("search_generator: budget exceeded for %s", P.label)
            return SearchResult(
                P, SearchOutcome.BUDGET_EXCEEDED, None, tested, budget
            )
        tested += 1
        if not divides(P, h):
            continue
        if abs(norm(h)) != target:
            continue
        if valuation(P, h) == 1:
            log.info(
                "search_generator: %s generated by %s after %d candidates",
                P.label,
                h,
                tested,
            )
            return SearchResult(P, SearchOutcome.FOUND, h, tested, budget)

    log.info(
        "search_generator: no generator for %s among %d candidates",
        P.label,
        tested,
    )
    return SearchResult(P, SearchOutcome.EXHAUSTED, None, tested, budget)


def search_period_decomposition(q, lam, budget: SearchBudget):
    """
    Split q into e conjugate factors inside the period ring

    Period elements with coordinates in [-b, b] are searched, by largest
    |coordinate| and then lexicographically, for Φ with
    |Φ(η) Φ(η_1) ... Φ(η_{e-1})| = q. Its e conjugates are returned,
    ordered so that factor s vanishes modulo q under shift s.

    :param q: prime different from λ
    :param lam: odd prime λ
    :param budget: SearchBudget, coeff_bound and max_candidates are used
    :return: list of e PeriodElements, or None if none found in budget
    """
    ps = period_system(lam, q)
    e = ps.e
    if e == 1:
        return [PeriodElement.constant(1, q)]

    assignment = congruence_assignment(ps)
    tested = 0
    for m in range(1, budget.coeff_bound + 1):
        for coords in product(range(-m, m + 1), repeat=e):
            if max(abs(c) for c in coords) != m:
                continue
            if tested >= budget.max_candidates:
                log.info(
                    "search_period_decomposition: budget exceeded for q=%d",
                    q,
                )
                return None
            tested += 1
            phi = PeriodElement(coords)
            if abs(period_element_norm(phi, ps)) != q:
                continue

            factors = [None] * e
            for c in range(e):
                conj = shift_period_element(phi, c)
                zeros = [
                    s
                    for s in range(e)
                    if evaluate_period_element(conj, assignment, s) == 0
                ]
                assert len(zeros) == 1, (
                    f"Factor {conj} of {q} vanishes at shifts {zeros}"
                )
                factors[zeros[0]] = conj
            assert None not in factors
            log.info(
                "search_period_decomposition: q=%d splits via %s", q, phi
            )
            return factors

    log.info(
        "search_period_decomposition: nothing found for q=%d in %d tries",
        q,
        tested,
    )
    return None


def _oracle_valuation(g, h, cap):
    """Number of times h divides g exactly"""
    m = 0
    quotient = exact_divide(g, h)
    while quotient is not None:
        m += 1
        assert m <= cap, f"{h} divides {g} more than {cap} times"
        quotient = exact_divide(quotient, h)
    return m


def brute_force_divisor_check(q, lam, g, budget=None) -> OracleReport:
    """
    Compare the period test with exact division by actual generators

    For every divisor P of q, divides(P, g) and valuation(P, g) are
    recomputed by repeated exact division by a generator of P when the
    search finds one. Records of divisors without a generator carry
    agree = None.

    :param q: prime different from λ
    :param lam: odd prime λ
    :param g: CyclotomicInteger
    :param budget: SearchBudget, defaults used if None
    :return: OracleReport
    """
    if q == lam:
        raise ValueError(f"q = {q} equals lambda; use the divisor 1 - α")
    if budget is None:
        budget = SearchBudget()

    cap = None
    if not g.is_zero:
        cap = multiplicity(q, abs(norm(g)))

    records = []
    for P in prime_divisors_of(q, lam):
        record = {
            "divisor": P.to_dict(),
            "divides": divides(P, g),
            "valuation": None if g.is_zero else valuation(P, g),
            "tested": False,
            "oracleDivides": None,
            "oracleValuation": None,
            "agree": None,
            "generator": None,
        }
        result = search_generator(P, budget)
        if result.found:
            h = result.generator
            record["tested"] = True
            record["generator"] = list(h.coeffs)
            record["oracleDivides"] = exact_divide(g, h) is not None
            agree = record["oracleDivides"] == record["divides"]
            if cap is not None:
                record["oracleValuation"] = _oracle_valuation(g, h, cap)
                agree = agree and (
                    record["oracleValuation"] == record["valuation"]
                )
            record["agree"] = agree
            if not agree:
                log.error("brute_force_divisor_check: mismatch %s", record)
        records.append(record)

    return OracleReport(
        origin="brute_force_divisor_check",
        data=records,
        context=f"lambda={lam} q={q} g={g}",
    )
