# pylint: disable=invalid-name

"""
Divisibility by, valuation at and factorization into ideal prime divisors.
"""

import logging
from functools import lru_cache

from sympy import factorint, isprime, multiplicity

from ideal_divisors.constants import LOGGER_NAME
from ideal_divisors.cyclotomic import (
    CyclotomicInteger,
    check_exponent,
    evaluate_mod,
    norm,
)
from ideal_divisors.divisors.divisor_model import (
    DivisorFactorization,
    DivisorKind,
    IdealPrimeDivisor,
)
from ideal_divisors.periods import (
    congruence_assignment,
    evaluate_period_element,
    period_system,
    represent_in_period_basis,
)

log = logging.getLogger(LOGGER_NAME)


def prime_divisors_of(q, lam):
    """
    All ideal prime divisors of the rational prime q

    :param q: prime
    :param lam: odd prime λ
    :return: list of IdealPrimeDivisor, in increasing shift
    """
    check_exponent(lam)
    if isinstance(q, bool) or not isinstance(q, int) or not isprime(q):
        raise ValueError(f"{q!r} is not prime")
    if q == lam:
        return [IdealPrimeDivisor(lam, q, DivisorKind.LAMBDA)]

    assignment = congruence_assignment(period_system(lam, q))
    return [
        IdealPrimeDivisor(lam, q, DivisorKind.GENERAL, assignment, shift)
        for shift in range(assignment.system.e)
    ]


def decomposition_type(q, lam):
    """
    How q decomposes

    :return: (f, e, label) with label "ramified" (q = λ), "inert" (e = 1),
        "split" (f = 1) or "partial"
    """
    check_exponent(lam)
    if q == lam:
        return 1, 1, "ramified"
    ps = period_system(lam, q)
    if ps.e == 1:
        label = "inert"
    elif ps.f == 1:
        label = "split"
    else:
        label = "partial"
    return ps.f, ps.e, label


def conjugate_divisor(P: IdealPrimeDivisor, c: int) -> IdealPrimeDivisor:
    """
    The divisor σ^c P, where σ substitutes α ↦ α^γ

    g is divisible by P iff conjugate(g, γ^c) is divisible by σ^c P.

    :param P: IdealPrimeDivisor
    :param c: integer exponent of σ
    :return: IdealPrimeDivisor over the same q
    """
    if P.kind == DivisorKind.LAMBDA:
        return P
    return IdealPrimeDivisor(
        P.lam,
        P.q,
        DivisorKind.GENERAL,
        P.assignment,
        (P.shift - c) % P.e,
    )


def _check_lambda(P: IdealPrimeDivisor, g: CyclotomicInteger):
    if not isinstance(g, CyclotomicInteger):
        raise ValueError(f"Not a CyclotomicInteger: {g!r}")
    if g.lam != P.lam:
        raise ValueError(f"Mismatched exponents: {P.lam} and {g.lam}")


def divides(P: IdealPrimeDivisor, g: CyclotomicInteger) -> bool:
    """
    Whether the ideal prime divisor P divides g

    g is written as φ_0(η) + α φ_1(η) + ... + α^{f-1} φ_{f-1}(η); it is
    divisible by P iff every φ_i vanishes modulo q under the shifted
    assignment of P. For q = λ the test is g(1) = 0 modulo λ.

    :param P: IdealPrimeDivisor
    :param g: CyclotomicInteger with the exponent of P
    :return: bool
    """
    _check_lambda(P, g)
    if g.is_zero:
        return True
    if P.kind == DivisorKind.LAMBDA:
        return evaluate_mod(g, 1, P.lam) == 0

    phis = represent_in_period_basis(g, P.system)
    return all(
        evaluate_period_element(phi, P.assignment, P.shift) == 0
        for phi in phis
    )


def divides_def1(P: IdealPrimeDivisor, g: CyclotomicInteger) -> bool:
    """
    Divisibility for f = 1 by substituting ξ for α: g(ξ) = 0 modulo q
    """
    _check_lambda(P, g)
    if P.xi is None:
        raise ValueError(
            f"{P.label} has residue degree {P.f}; substitution needs f = 1"
        )
    return evaluate_mod(g, P.xi, P.q) == 0


@lru_cache(maxsize=None)
def psi_multiplier(P: IdealPrimeDivisor) -> CyclotomicInteger:
    """
    An element of the period ring divisible by every other divisor of q
    but not by P

    For each other shift t one period η_j is chosen whose residues under
    the shifts of P and t differ; ψ is the product of the factors
    η_j - u_{j+t}. With distinct residues j = 0 always works, giving
    ψ = Π_{c≠0} (η_0 - u_{shift+c}). For e = 1, ψ = 1.

    :param P: GENERAL IdealPrimeDivisor
    :return: CyclotomicInteger
    """
    if P.kind != DivisorKind.GENERAL:
        raise ValueError(f"{P.label} has no multiplier ψ")
    ps, u, e, s = P.system, P.assignment.u, P.e, P.shift

    psi = CyclotomicInteger.constant(P.lam, 1)
    for c in range(1, e):
        t = (s + c) % e
        j = next(j for j in range(e) if u[(j + t) % e] != u[(j + s) % e])
        psi = psi * (ps.period(j) - u[(j + t) % e])

    assert not divides(P, psi), f"ψ for {P.label} is divisible by it"
    for c in range(1, e):
        other = conjugate_divisor(P, c)
        assert divides(other, psi), f"ψ for {P.label} misses {other.label}"
    log.debug("psi_multiplier: %s -> %s", P.label, psi)
    return psi


def valuation(P: IdealPrimeDivisor, g: CyclotomicInteger) -> int:
    """
    The multiplicity of P in g

    GENERAL: the largest m with g ψ^m divisible by q^m. LAMBDA: the
    number of times 1 - α divides g exactly. Both are capped by
    v_q(|norm(g)|) / f.

    :param P: IdealPrimeDivisor
    :param g: nonzero CyclotomicInteger
    :return: nonnegative integer
    """
    # pylint: disable=import-outside-toplevel
    from ideal_divisors.oracle.oracle_division import exact_divide

    _check_lambda(P, g)
    if g.is_zero:
        raise ValueError("Valuation of zero is infinite")
    if not divides(P, g):
        return 0

    cap = multiplicity(P.q, abs(norm(g))) // P.f
    m = 0
    if P.kind == DivisorKind.LAMBDA:
        one_minus_alpha = 1 - CyclotomicInteger.alpha_power(P.lam, 1)
        quotient = exact_divide(g, one_minus_alpha)
        while quotient is not None:
            m += 1
            assert m <= cap, f"Valuation at {P.label} exceeds bound {cap}"
            quotient = exact_divide(quotient, one_minus_alpha)
        return m

    psi = psi_multiplier(P)
    q = P.q
    # reduced holds g ψ^m / q^m
    reduced = g
    while True:
        candidate = reduced * psi
        if any(c % q for c in candidate.coeffs):
            break
        reduced = CyclotomicInteger.from_canonical(
            P.lam, (c // q for c in candidate.coeffs)
        )
        m += 1
        assert m <= cap, f"Valuation at {P.label} exceeds bound {cap}"
    return m


def factor(g: CyclotomicInteger) -> DivisorFactorization:
    """
    Complete factorization of g into ideal prime divisors

    :param g: nonzero CyclotomicInteger
    :return: DivisorFactorization
    """
    if not isinstance(g, CyclotomicInteger):
        raise ValueError(f"Not a CyclotomicInteger: {g!r}")
    if g.is_zero:
        raise ValueError("Zero has no factorization")

    g_norm = norm(g)
    entries = []
    for q in sorted(factorint(abs(g_norm))):
        for P in prime_divisors_of(int(q), g.lam):
            nu = valuation(P, g)
            if nu > 0:
                entries.append((P, nu))

    result = DivisorFactorization(g, entries, g_norm)
    assert result.reconstructed_norm == abs(g_norm), (
        f"Divisors of {g} reconstruct {result.reconstructed_norm}, "
        f"norm is {g_norm}"
    )
    log.debug("factor: %s -> %s", g, [P.label for P, _ in entries])
    return result
