# pylint: disable=invalid-name

"""
Exact division in Z[α] and an independent norm computation
"""

import logging

from sympy import Poly, cyclotomic_poly, symbols

from ideal_divisors.constants import LOGGER_NAME
from ideal_divisors.cyclotomic import CyclotomicInteger, conjugate

log = logging.getLogger(LOGGER_NAME)

x = symbols("x")


def _cofactor(h: CyclotomicInteger) -> CyclotomicInteger:
    """Π_{k=2}^{λ-1} conjugate(h, k), so that h times it is norm(h)"""
    product = CyclotomicInteger.constant(h.lam, 1)
    for k in range(2, h.lam):
        product = product * conjugate(h, k)
    return product


def exact_divide(g: CyclotomicInteger, h: CyclotomicInteger):
    """
    The quotient g / h when it lies in Z[α]

    g / h = g · h(α^2) ... h(α^{λ-1}) / norm(h), so h divides g iff every
    coefficient of the numerator is divisible by norm(h).

    :param g: dividend
    :param h: nonzero divisor with the same exponent
    :return: CyclotomicInteger quotient, or None if h does not divide g
    """
    g.check_compatible(h)
    if h.is_zero:
        raise ValueError("Division by zero")

    cofactor = _cofactor(h)
    h_norm = h * cofactor
    assert h_norm.is_rational, f"Norm of {h!r} is not rational"
    n = h_norm.coeffs[0]

    numerator = g * cofactor
    if any(c % n for c in numerator.coeffs):
        return None
    quotient = CyclotomicInteger.from_canonical(
        g.lam, (c // n for c in numerator.coeffs)
    )
    assert quotient * h == g, f"{quotient!r} * {h!r} differs from {g!r}"
    return quotient


def norm_via_resultant(g: CyclotomicInteger) -> int:
    """
    Norm of g as the resultant of the cyclotomic polynomial and the
    coefficient polynomial of g

    :param g: CyclotomicInteger
    :return: rational integer
    """
    if g.is_zero:
        return 0
    g_poly = Poly(list(reversed(g.coeffs)), x, domain="ZZ")
    phi = Poly(cyclotomic_poly(g.lam, x), x, domain="ZZ")
    value = int(phi.resultant(g_poly))
    log.debug("norm_via_resultant: %s -> %d", g, value)
    return value
