# pylint: disable=invalid-name

"""
Cyclotomic integer data model.
"""

import operator
from functools import lru_cache

from sympy import isprime


@lru_cache(maxsize=None)
def check_exponent(lam):
    """Check that lam is an odd prime

    :param lam: exponent of the root of unity
    :return: lam
    """
    if isinstance(lam, bool) or not isinstance(lam, int):
        raise ValueError(f"Exponent must be an integer, got {lam!r}")
    if lam < 3 or not isprime(lam):
        raise ValueError(f"Exponent must be an odd prime, got {lam}")
    return lam


class CyclotomicInteger:
    """
    An element a_0 + a_1 α + ... + a_{λ-1} α^{λ-1} of Z[α], α^λ = 1

    Values are kept in canonical form, a_{λ-1} = 0, obtained by
    subtracting a_{λ-1} from every coefficient (1 + α + ... + α^{λ-1} = 0).
    Two values are equal iff their canonical coefficients are equal.

    Instances are immutable and hashable.

    Attributes:
        lam: the prime exponent λ
        coeffs: tuple of λ Python integers, coefficient i belongs to α^i
    """

    __slots__ = ("lam", "coeffs")

    def __init__(self, lam, coeffs):
        """create CyclotomicInteger

        :param lam: odd prime λ
        :param coeffs: sequence of λ integers
        """
        check_exponent(lam)
        try:
            coeffs = [operator.index(c) for c in coeffs]
        except TypeError as err:
            raise ValueError(
                f"Coefficients must be integers, got {coeffs!r}"
            ) from err
        if len(coeffs) != lam:
            raise ValueError(
                f"Expected {lam} coefficients, got {len(coeffs)}"
            )
        top = coeffs[-1]
        self.lam = lam
        self.coeffs = tuple(c - top for c in coeffs)

    @classmethod
    def from_canonical(cls, lam, coeffs):
        """Wrap already canonical coefficients without any checks"""
        obj = cls.__new__(cls)
        obj.lam = lam
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def from_raw(cls, lam, coeffs):
        """Canonicalise a list of exact integers of length lam (no checks)"""
        top = coeffs[-1]
        return cls.from_canonical(lam, (c - top for c in coeffs))

    @classmethod
    def constant(cls, lam, value):
        """The rational integer value"""
        return cls(lam, [value] + [0] * (lam - 1))

    @classmethod
    def alpha_power(cls, lam, k):
        """The root of unity α^k"""
        raw = [0] * lam
        raw[k % lam] = 1
        return cls(lam, raw)

    @property
    def is_zero(self):
        """True for the zero element"""
        return not any(self.coeffs)

    @property
    def is_rational(self):
        """True when the value is a rational integer"""
        return not any(self.coeffs[1:])

    @property
    def support(self):
        """Number of nonzero canonical coefficients"""
        return sum(1 for c in self.coeffs if c)

    def check_compatible(self, other):
        """Raise ValueError unless other is a CyclotomicInteger with the
        same exponent"""
        if not isinstance(other, CyclotomicInteger):
            raise ValueError(f"Not a CyclotomicInteger: {other!r}")
        if other.lam != self.lam:
            raise ValueError(
                f"Mismatched exponents: {self.lam} and {other.lam}"
            )

    def _coerce(self, other):
        if isinstance(other, int):
            return CyclotomicInteger.constant(self.lam, other)
        self.check_compatible(other)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return CyclotomicInteger.from_raw(
            self.lam, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger.from_canonical(
            self.lam, (-c for c in self.coeffs)
        )

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInteger.from_canonical(
                self.lam, (other * c for c in self.coeffs)
            )
        self.check_compatible(other)
        lam = self.lam
        out = [0] * lam
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[(i + j) % lam] += a * b
        return CyclotomicInteger.from_raw(lam, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError(f"Negative power {n} is not an integer")
        result = CyclotomicInteger.constant(self.lam, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_rational and self.coeffs[0] == other
        if not isinstance(other, CyclotomicInteger):
            return NotImplemented
        return self.lam == other.lam and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.lam, self.coeffs))

    def __repr__(self):
        return f"CyclotomicInteger({self.lam}, {list(self.coeffs)})"

    def __str__(self):
        """Default printer for CyclotomicInteger, e.g. 2 + α - α^4"""
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                power = "α" if i == 1 else f"α^{i}"
                body = power if abs(c) == 1 else f"{abs(c)}{power}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        s = f"-{first}" if first_sign == "-" else first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s
