"""
Unit tests for the divisor data models
"""

import pytest

from ideal_divisors.cyclotomic import CyclotomicInteger
from ideal_divisors.divisors import (
    DivisorFactorization,
    DivisorKind,
    IdealPrimeDivisor,
    prime_divisors_of,
)


def test_split_divisor_properties(divisors_of_11):
    """
    f = 1 divisors carry a residue ξ
    """
    P = divisors_of_11[1]
    assert P.kind == DivisorKind.GENERAL
    assert (P.f, P.e, P.shift) == (1, 4, 1)
    assert P.u == (9, 4, 5, 3)
    assert P.xi == 9
    assert P.label == "P(11; xi=9)"
    assert P.to_dict() == {"q": 11, "f": 1, "xi": 9}
    assert str(P) == "P(11; xi=9)"


def test_partial_divisor_properties(divisors_of_19):
    """
    f > 1 divisors are labelled by their shifted assignment
    """
    P0, P1 = divisors_of_19
    assert P0.xi is None
    assert P0.u == (4, 14)
    assert P1.u == (14, 4)
    assert P1.label == "P(19; u=14,4)"
    assert P1.to_dict() == {"q": 19, "f": 2, "shift": 1, "u": [14, 4]}
    assert P0.system.q == 19


def test_lambda_divisor_properties():
    """
    The divisor of 1 - α
    """
    (P,) = prime_divisors_of(5, 5)
    assert P.kind == DivisorKind.LAMBDA
    assert (P.f, P.e, P.xi) == (1, 1, 1)
    assert P.u == ()
    assert P.system is None
    assert P.label == "P(5; 1-α)"
    assert P.to_dict() == {"q": 5, "f": 1, "kind": "lambda"}


def test_divisor_equality(divisors_of_11):
    """
    Divisors compare by exponent, prime, kind and shift
    """
    again = prime_divisors_of(11, 5)
    assert again == divisors_of_11
    assert len(set(again + divisors_of_11)) == 4
    assert divisors_of_11[0] != divisors_of_11[1]
    assert divisors_of_11[0] != "P(11; xi=3)"


def test_lambda_divisor_requires_q_equal_lambda():
    """
    LAMBDA divisors only exist over λ
    """
    with pytest.raises(AssertionError):
        IdealPrimeDivisor(5, 11, DivisorKind.LAMBDA)


def test_factorization_model(divisors_of_11):
    """
    Reconstructed norm, sign and rendering
    """
    g = CyclotomicInteger(5, [2, 1, 0, 0, 0])
    fact = DivisorFactorization(g, [(divisors_of_11[1], 1)], 11)
    assert fact.reconstructed_norm == 11
    assert fact.unit_norm_residual == 1
    assert fact.to_dict() == {
        "norm": 11,
        "entries": [{"q": 11, "f": 1, "xi": 9, "multiplicity": 1}],
    }
    assert "P(11; xi=9)^1" in str(fact)


def test_factorization_of_unit_is_empty():
    """
    Units have norm 1 and no entries
    """
    fact = DivisorFactorization(CyclotomicInteger.constant(5, 1), [], 1)
    assert fact.reconstructed_norm == 1
    assert fact.to_dict() == {"norm": 1, "entries": []}
