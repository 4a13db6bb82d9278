# pylint: disable=invalid-name

"""
Functions operating on cyclotomic integers.

For example::

    g = canonicalize(5, [2, 1, 0, 0, 0])       # 2 + α
    h = conjugate(g, 2)                        # 2 + α^2
    norm(g)                                    # 11
    evaluate_mod(g, 9, 11)                     # 0

All functions are pure; values are exact Python integers.
"""

import logging

from ideal_divisors.constants import LOGGER_NAME
from ideal_divisors.cyclotomic.cyclo_model import CyclotomicInteger

log = logging.getLogger(LOGGER_NAME)


def canonicalize(lam, raw):
    """
    Canonical form of a raw coefficient sequence

    :param lam: odd prime λ
    :param raw: sequence of λ integers, index i is the coefficient of α^i
    :return: CyclotomicInteger with a_{λ-1} = 0
    """
    return CyclotomicInteger(lam, raw)


def add(g: CyclotomicInteger, h: CyclotomicInteger) -> CyclotomicInteger:
    """Sum of two cyclotomic integers with the same exponent"""
    g.check_compatible(h)
    return g + h


def neg(g: CyclotomicInteger) -> CyclotomicInteger:
    """Additive inverse"""
    return -g


def mul(g: CyclotomicInteger, h: CyclotomicInteger) -> CyclotomicInteger:
    """Product: convolution of coefficients with exponents taken mod λ"""
    g.check_compatible(h)
    return g * h


def conjugate(g: CyclotomicInteger, k: int) -> CyclotomicInteger:
    """
    Substitute α ↦ α^k

    :param g: CyclotomicInteger
    :param k: integer prime to λ
    :return: conjugate of g
    """
    lam = g.lam
    if k % lam == 0:
        raise ValueError(f"Conjugation exponent {k} is divisible by {lam}")
    out = [0] * lam
    for i, a in enumerate(g.coeffs):
        if a:
            out[(i * k) % lam] += a
    return CyclotomicInteger.from_raw(lam, out)


def norm(g: CyclotomicInteger) -> int:
    """
    Norm: the product g(α) g(α^2) ... g(α^{λ-1})

    :param g: CyclotomicInteger
    :return: rational integer
    """
    product = g
    for k in range(2, g.lam):
        product = product * conjugate(g, k)
    assert product.is_rational, f"Norm of {g!r} is not rational: {product!r}"
    return product.coeffs[0]


def evaluate_mod(g: CyclotomicInteger, xi: int, modulus: int) -> int:
    """
    Substitute α ↦ xi and reduce

    This is a ring homomorphism Z[α] -> Z/modulus whenever
    xi^λ = 1 (mod modulus).

    :param g: CyclotomicInteger
    :param xi: residue substituted for α
    :param modulus: integer >= 2
    :return: residue in [0, modulus)
    """
    if modulus < 2:
        raise ValueError(f"Modulus must be at least 2, got {modulus}")
    value = 0
    for a in reversed(g.coeffs):
        value = (value * xi + a) % modulus
    return value


def parse_coefficients(text: str, lam: int) -> CyclotomicInteger:
    """
    Read the textual encoding "a0,a1,...,a_{λ-1}"

    :param text: comma-separated list of λ integers
    :param lam: odd prime λ
    :return: CyclotomicInteger
    """
    try:
        raw = [int(item) for item in text.split(",")]
    except ValueError as err:
        raise ValueError(f"Malformed coefficient list {text!r}") from err
    return CyclotomicInteger(lam, raw)


def format_coefficients(g: CyclotomicInteger) -> str:
    """Textual encoding of the canonical coefficients"""
    return ",".join(str(c) for c in g.coeffs)
