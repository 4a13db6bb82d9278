"""
Unit tests for the CyclotomicInteger model
"""

import pytest

from ideal_divisors.cyclotomic import CyclotomicInteger, check_exponent


@pytest.mark.parametrize("lam", [3, 5, 7, 11, 13, 31])
def test_check_exponent_accepts_odd_primes(lam):
    """
    Odd primes are valid exponents
    """
    assert check_exponent(lam) == lam


@pytest.mark.parametrize("lam", [2, 1, 0, -5, 9, 15, True])
def test_check_exponent_rejects(lam):
    """
    Anything but an odd prime is rejected
    """
    with pytest.raises(ValueError):
        check_exponent(lam)


def test_check_exponent_rejects_non_int():
    """
    Exponents must be integers
    """
    with pytest.raises(ValueError):
        check_exponent(5.0)


def test_constructor_canonical_form():
    """
    The last coefficient is subtracted from all of them
    """
    g = CyclotomicInteger(5, [0, 0, 0, 0, 3])
    assert g.coeffs == (-3, -3, -3, -3, 0)


def test_constructor_vanishing_sum():
    """
    1 + α + ... + α^4 is zero
    """
    g = CyclotomicInteger(5, [1, 1, 1, 1, 1])
    assert g.is_zero
    assert g == CyclotomicInteger(5, [0] * 5)


def test_constructor_wrong_length():
    """
    Exactly λ coefficients are needed
    """
    with pytest.raises(ValueError, match="Expected 5 coefficients"):
        CyclotomicInteger(5, [1, 2, 3])


def test_constructor_non_integer():
    """
    Floats are not accepted as coefficients
    """
    with pytest.raises(ValueError, match="must be integers"):
        CyclotomicInteger(3, [1.5, 0, 0])


def test_constructor_bad_exponent():
    """
    Exponent 4 is not prime
    """
    with pytest.raises(ValueError):
        CyclotomicInteger(4, [0, 0, 0, 0])


def test_equality_is_up_to_relation():
    """
    Representations differing by a multiple of 1 + α + ... + α^{λ-1}
    are equal and hash alike
    """
    g = CyclotomicInteger(5, [2, 1, 0, 0, 0])
    h = CyclotomicInteger(5, [3, 2, 1, 1, 1])
    assert g == h
    assert hash(g) == hash(h)
    assert len({g, h}) == 1


def test_equality_with_int():
    """
    Rational values compare equal to Python integers
    """
    assert CyclotomicInteger.constant(7, 4) == 4
    assert CyclotomicInteger(5, [2, 1, 0, 0, 0]) != 2


def test_different_exponents_not_equal():
    """
    Values with different exponents are never equal
    """
    assert CyclotomicInteger.constant(3, 1) != CyclotomicInteger.constant(
        5, 1
    )


def test_properties():
    """
    is_zero, is_rational and support
    """
    g = CyclotomicInteger(7, [1, 0, -2, 0, 0, 3, 0])
    assert not g.is_zero
    assert not g.is_rational
    assert g.support == 3
    assert CyclotomicInteger.constant(7, -4).is_rational


def test_alpha_power():
    """
    α^k with k reduced modulo λ
    """
    assert CyclotomicInteger.alpha_power(5, 7) == CyclotomicInteger(
        5, [0, 0, 1, 0, 0]
    )
    assert CyclotomicInteger.alpha_power(5, 5) == 1


def test_arithmetic_operators():
    """
    Operators with CyclotomicInteger and int operands
    """
    alpha = CyclotomicInteger.alpha_power(5, 1)
    g = 2 + alpha
    assert g == CyclotomicInteger(5, [2, 1, 0, 0, 0])
    assert g - 2 == alpha
    assert 2 - alpha == CyclotomicInteger(5, [2, -1, 0, 0, 0])
    assert 3 * g == CyclotomicInteger(5, [6, 3, 0, 0, 0])
    assert alpha**5 == 1
    assert g**0 == 1


def test_negative_power():
    """
    Only non-negative powers exist in the ring
    """
    with pytest.raises(ValueError):
        _ = CyclotomicInteger.alpha_power(5, 1) ** -1


def test_mismatched_exponents():
    """
    Mixing exponents is an error
    """
    with pytest.raises(ValueError, match="Mismatched"):
        _ = CyclotomicInteger.constant(3, 1) + CyclotomicInteger.constant(
            5, 1
        )


def test_str():
    """
    Human readable rendering
    """
    assert str(CyclotomicInteger(5, [2, 1, 0, 0, 0])) == "2 + α"
    assert str(CyclotomicInteger(5, [-1, 0, 0, -3, 0])) == "-1 - 3α^3"
    assert str(CyclotomicInteger(5, [0] * 5)) == "0"
