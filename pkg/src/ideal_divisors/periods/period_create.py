# pylint: disable=invalid-name

"""
Create period systems and their congruence assignments.
"""

import logging
from functools import lru_cache

from sympy import isprime
from sympy.ntheory import n_order
from sympy.ntheory import primitive_root as _sympy_primitive_root
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_add, gf_factor_sqf, gf_mul, gf_rem

from ideal_divisors.constants import LOGGER_NAME
from ideal_divisors.cyclotomic import check_exponent
from ideal_divisors.periods.period_functions import (
    evaluate_period_element,
    period_polynomial,
    period_product,
)
from ideal_divisors.periods.period_model import (
    CongruenceAssignment,
    PeriodSystem,
)

log = logging.getLogger(LOGGER_NAME)


def primitive_root(lam):
    """
    Least positive primitive root modulo the prime lam

    :param lam: prime
    :return: integer γ generating (Z/lam)*
    """
    if not isprime(lam):
        raise ValueError(f"{lam} is not prime")
    return int(_sympy_primitive_root(lam))


@lru_cache(maxsize=None)
def period_system(lam, q) -> PeriodSystem:
    """
    The Gauss periods of q for the exponent lam

    :param lam: odd prime λ
    :param q: prime different from λ
    :return: PeriodSystem
    """
    check_exponent(lam)
    if not isprime(q):
        raise ValueError(f"{q} is not prime")
    if q == lam:
        raise ValueError(
            f"q = {q} equals lambda; it has the special divisor 1 - α"
        )
    f = int(n_order(q, lam))
    e = (lam - 1) // f
    gamma = primitive_root(lam)
    cosets = [
        [pow(gamma, k * e + j, lam) for k in range(1, f + 1)]
        for j in range(e)
    ]
    log.debug(
        "period_system: lambda=%d q=%d f=%d e=%d gamma=%d", lam, q, f, e, gamma
    )
    return PeriodSystem(lam, q, f, e, gamma, cosets)


def _canonical_rotation(u):
    """Rotation of u that is lexicographically least (so u_0 is minimal)"""
    return min(tuple(u[s:] + u[:s]) for s in range(len(u)))


def _residues_from_factor(ps: PeriodSystem, h):
    """
    Images of the periods in GF(q)[x] / (h)

    h is an irreducible factor of degree f of the cyclotomic polynomial
    modulo q; every period maps to a constant.
    """
    q = ps.q
    powers = [[ZZ(1)]]
    for _ in range(1, ps.lam):
        shifted = gf_mul(powers[-1], [ZZ(1), ZZ(0)], q, ZZ)
        powers.append(gf_rem(shifted, h, q, ZZ))

    u = []
    for coset in ps.cosets:
        image = []
        for t in coset:
            image = gf_add(image, powers[t], q, ZZ)
        assert len(image) <= 1, (
            f"Period image {image} modulo {q} is not a constant"
        )
        u.append(int(image[0]) if image else 0)
    return u


def _check_assignment(assignment: CongruenceAssignment):
    """Assert the defining properties of a congruence assignment"""
    ps = assignment.system
    q, e, u = ps.q, ps.e, assignment.u

    poly = period_polynomial(ps)
    for root in u:
        value = 0
        for c in poly:
            value = (value * root + c) % q
        assert value == 0, f"{root} is not a root of {poly} modulo {q}"

    for i in range(e):
        for j in range(i, e):
            product = evaluate_period_element(
                period_product(ps, i, j), assignment, 0
            )
            assert product == (u[i] * u[j]) % q, (
                f"η_{i} η_{j} does not map to u_{i} u_{j} modulo {q}"
            )

    shifts = {assignment.shifted(s) for s in range(e)}
    assert len(shifts) == e, f"Shifts of {u} are not pairwise distinct"


@lru_cache(maxsize=None)
def congruence_assignment(ps: PeriodSystem) -> CongruenceAssignment:
    """
    A congruence assignment η_j ↦ u_j modulo q

    One irreducible factor h of degree f of the cyclotomic polynomial
    modulo q is found by equal-degree factorisation; u_j is the image of
    η_j modulo (h, q). The tuple is rotated so that it is lexicographically
    least; its e cyclic shifts are all the valid assignments.

    :param ps: PeriodSystem
    :return: CongruenceAssignment
    """
    cyclotomic_poly = ZZ.map([1] * ps.lam)
    _, factors = gf_factor_sqf(cyclotomic_poly, ps.q, ZZ)
    factors = sorted(factors)
    assert factors, f"No factor of the cyclotomic polynomial modulo {ps.q}"
    h = factors[0]
    assert len(h) - 1 == ps.f, (
        f"Factor {h} modulo {ps.q} does not have degree {ps.f}"
    )

    u = _canonical_rotation(_residues_from_factor(ps, h))
    assignment = CongruenceAssignment(ps, u)
    _check_assignment(assignment)
    if assignment.has_repeated_roots:
        log.info(
            "congruence_assignment: q=%d is exceptional for lambda=%d, "
            "u=%s repeats residues",
            ps.q,
            ps.lam,
            u,
        )
    return assignment
