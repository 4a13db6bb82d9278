# pylint: disable=invalid-name

"""
Functions working with Gauss periods: the period polynomial, the
decomposition g(α) = φ_0(η) + α φ_1(η) + ... + α^{f-1} φ_{f-1}(η)
and evaluation of period elements at congruence roots.
"""

import logging
from functools import lru_cache

from sympy import Matrix

from ideal_divisors.constants import LOGGER_NAME
from ideal_divisors.cyclotomic import CyclotomicInteger
from ideal_divisors.periods.period_model import (
    CongruenceAssignment,
    PeriodElement,
    PeriodSystem,
)

log = logging.getLogger(LOGGER_NAME)


def to_period_element(g: CyclotomicInteger, ps: PeriodSystem):
    """
    Coordinates of an element of the period ring

    g lies in the period ring iff its coefficients are constant on every
    coset; the constant term is folded in using Σ η_j = -1.

    :param g: CyclotomicInteger in the period ring
    :param ps: PeriodSystem
    :return: PeriodElement
    """
    const = g.coeffs[0]
    coords = []
    for coset in ps.cosets:
        values = {g.coeffs[t] for t in coset}
        if len(values) != 1:
            raise ValueError(f"{g} is not in the period ring of {ps.q}")
        coords.append(values.pop() - const)
    return PeriodElement(coords)


@lru_cache(maxsize=None)
def period_product(ps: PeriodSystem, i: int, j: int) -> PeriodElement:
    """η_i η_j expressed in the period basis"""
    return to_period_element(ps.period(i) * ps.period(j), ps)


def period_polynomial(ps: PeriodSystem):
    """
    The monic polynomial of degree e whose roots are the periods

    Π_j (x - η_j) is expanded with cyclotomic arithmetic; every
    coefficient must come out rational.

    :param ps: PeriodSystem
    :return: tuple of e + 1 integers, leading coefficient first
    """
    lam = ps.lam
    one = CyclotomicInteger.constant(lam, 1)
    zero = CyclotomicInteger.constant(lam, 0)
    # low degree first while expanding
    poly = [one]
    for eta in ps.periods:
        shifted = [zero] + poly
        for k, c in enumerate(poly):
            shifted[k] = shifted[k] - eta * c
        poly = shifted

    for c in poly:
        assert c.is_rational, f"Period polynomial coefficient {c} irrational"
    coeffs = tuple(c.coeffs[0] for c in reversed(poly))

    value = zero
    eta0 = ps.period(0)
    for c in coeffs:
        value = value * eta0 + c
    assert value.is_zero, f"η_0 is not a root of {coeffs}"
    return coeffs


def format_polynomial(coeffs, var="x"):
    """Human readable form of an integer polynomial, leading term first"""
    degree = len(coeffs) - 1
    terms = []
    for k, c in enumerate(coeffs):
        power = degree - k
        if not c:
            continue
        mono = "" if power == 0 else (var if power == 1 else f"{var}^{power}")
        if mono and abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{mono}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        s += f" {sign} {body}"
    return s


@lru_cache(maxsize=None)
def _period_basis_inverse(lam, f, cosets):
    """
    Integer inverse of the matrix of the basis {α^i η_j}

    Column i*e + j holds α^i η_j on 1, α, ..., α^{λ-2}. The basis is a
    Z-basis of Z[α], so the rational inverse must be integral.
    """
    e = len(cosets)
    n = lam - 1
    columns = []
    for i in range(f):
        for j in range(e):
            raw = [0] * lam
            for t in cosets[j]:
                raw[(t + i) % lam] += 1
            columns.append(CyclotomicInteger(lam, raw).coeffs[:n])
    basis = Matrix(n, n, lambda r, c: columns[c][r])
    inverse = basis.inv()
    assert all(
        entry.is_integer for entry in inverse
    ), f"Period basis for lambda={lam}, f={f} is not unimodular"
    log.debug("Inverted period basis for lambda=%d, f=%d", lam, f)
    return tuple(
        tuple(int(inverse[r, c]) for c in range(n)) for r in range(n)
    )


def represent_in_period_basis(g: CyclotomicInteger, ps: PeriodSystem):
    """
    Write g = φ_0(η) + α φ_1(η) + ... + α^{f-1} φ_{f-1}(η)

    :param g: CyclotomicInteger with the exponent of ps
    :param ps: PeriodSystem
    :return: list of f PeriodElements φ_0 ... φ_{f-1}
    """
    if g.lam != ps.lam:
        raise ValueError(f"Mismatched exponents: {g.lam} and {ps.lam}")
    inverse = _period_basis_inverse(ps.lam, ps.f, ps.cosets)
    vector = g.coeffs[:-1]
    solution = [sum(a * b for a, b in zip(row, vector)) for row in inverse]
    phis = [
        PeriodElement(solution[i * ps.e : (i + 1) * ps.e])
        for i in range(ps.f)
    ]

    lam = ps.lam
    raw = [0] * lam
    for i, phi in enumerate(phis):
        for t, c in enumerate(phi.to_cyclotomic(ps).coeffs):
            raw[(t + i) % lam] += c
    assert (
        CyclotomicInteger.from_raw(lam, raw) == g
    ), f"Period decomposition of {g!r} does not reconstruct it"
    return phis


def evaluate_period_element(
    phi: PeriodElement, assignment: CongruenceAssignment, shift: int
) -> int:
    """
    Substitute η_j ↦ u_{j+shift} and reduce modulo q

    :param phi: PeriodElement
    :param assignment: CongruenceAssignment
    :param shift: integer in [0, e)
    :return: residue modulo q
    """
    e = assignment.system.e
    if not 0 <= shift < e:
        raise ValueError(f"Shift {shift} outside [0, {e})")
    u = assignment.u
    value = sum(c * u[(j + shift) % e] for j, c in enumerate(phi.coords))
    return value % assignment.system.q


def shift_period_element(phi: PeriodElement, c: int) -> PeriodElement:
    """Image of phi under α ↦ α^{γ^c}, i.e. η_j ↦ η_{j+c}"""
    e = phi.e
    coords = [0] * e
    for j, value in enumerate(phi.coords):
        coords[(j + c) % e] = value
    return PeriodElement(coords)


def period_element_norm(phi: PeriodElement, ps: PeriodSystem) -> int:
    """
    The product Φ(η) Φ(η_1) ... Φ(η_{e-1})

    :param phi: PeriodElement
    :param ps: PeriodSystem
    :return: rational integer
    """
    product = CyclotomicInteger.constant(ps.lam, 1)
    for c in range(ps.e):
        product = product * shift_period_element(phi, c).to_cyclotomic(ps)
    assert product.is_rational, f"Product of conjugates of {phi} irrational"
    return product.coeffs[0]
