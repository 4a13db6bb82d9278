# pylint: disable=invalid-name

"""
Data models for ideal prime divisors and factorizations
"""

from enum import Enum

from ideal_divisors.cyclotomic import CyclotomicInteger
from ideal_divisors.periods import CongruenceAssignment


class DivisorKind(Enum):
    """LAMBDA is the divisor of 1 - α over q = λ; GENERAL covers q ≠ λ"""

    LAMBDA = "lambda"
    GENERAL = "general"


class IdealPrimeDivisor:
    """
    A prime divisor of the rational prime q in Z[α]

    A GENERAL divisor is the congruence assignment shifted by `shift`:
    η_j ↦ u_{j+shift}. When f = 1 it is equally described by the single
    residue ξ = u_shift, a root of ξ^λ = 1 modulo q other than 1.
    The LAMBDA divisor is the divisor of 1 - α (ξ = 1 modulo λ).

    Use prime_divisors_of() rather than building these directly.

    Attributes:
        lam: odd prime λ
        q: rational prime divided
        kind: DivisorKind
        assignment: CongruenceAssignment, None for LAMBDA
        shift: integer in [0, e)
    """

    def __init__(self, lam, q, kind, assignment=None, shift=0):
        self.lam = lam
        self.q = q
        self.kind = kind
        self.assignment = assignment
        self.shift = shift

        if kind == DivisorKind.GENERAL:
            assert isinstance(assignment, CongruenceAssignment)
            assert 0 <= shift < assignment.system.e, shift
        else:
            assert q == lam and assignment is None and shift == 0

    @property
    def system(self):
        """PeriodSystem of a GENERAL divisor"""
        return self.assignment.system if self.assignment else None

    @property
    def f(self):
        """Residue degree: q^f is the norm of the divisor"""
        return self.assignment.system.f if self.assignment else 1

    @property
    def e(self):
        """Number of divisors of q"""
        return self.assignment.system.e if self.assignment else 1

    @property
    def u(self):
        """The shifted assignment (u_shift, u_{shift+1}, ...)"""
        if self.assignment is None:
            return ()
        return self.assignment.shifted(self.shift)

    @property
    def xi(self):
        """Residue substituted for α when f = 1, otherwise None"""
        if self.kind == DivisorKind.LAMBDA:
            return 1
        if self.f == 1:
            return self.u[0]
        return None

    @property
    def label(self):
        """Short identifier, e.g. P(11; xi=9) or P(19; u=4,14)"""
        if self.kind == DivisorKind.LAMBDA:
            return f"P({self.q}; 1-α)"
        if self.xi is not None:
            return f"P({self.q}; xi={self.xi})"
        return f"P({self.q}; u={','.join(str(x) for x in self.u)})"

    def to_dict(self):
        """JSON-ready description of the divisor"""
        record = {"q": self.q, "f": self.f}
        if self.kind == DivisorKind.LAMBDA:
            record["kind"] = self.kind.value
        elif self.xi is not None:
            record["xi"] = self.xi
        else:
            record["shift"] = self.shift
            record["u"] = list(self.u)
        return record

    def __eq__(self, other):
        if not isinstance(other, IdealPrimeDivisor):
            return False
        return (self.lam, self.q, self.kind, self.shift) == (
            other.lam,
            other.q,
            other.kind,
            other.shift,
        )

    def __hash__(self):
        return hash((self.lam, self.q, self.kind, self.shift))

    def __repr__(self):
        return f"IdealPrimeDivisor(lambda={self.lam}, {self.label})"

    def __str__(self):
        return self.label


class DivisorFactorization:
    """
    The ideal prime divisors of a cyclotomic integer with multiplicities

    Attributes:
        subject: the factored CyclotomicInteger
        entries: tuple of (IdealPrimeDivisor, multiplicity) pairs,
            ordered by q and then by shift
        norm: norm of the subject
        unit_norm_residual: sign of the norm
    """

    def __init__(self, subject: CyclotomicInteger, entries, norm):
        self.subject = subject
        self.entries = tuple(entries)
        self.norm = norm
        self.unit_norm_residual = 1 if norm > 0 else -1

    @property
    def reconstructed_norm(self):
        """Π q^(f ν) over the entries"""
        value = 1
        for divisor, multiplicity in self.entries:
            value *= divisor.q ** (divisor.f * multiplicity)
        return value

    def to_dict(self):
        """JSON-ready description, e.g.
        {"norm": 11, "entries": [{"q": 11, "f": 1, "xi": 9,
        "multiplicity": 1}]}"""
        return {
            "norm": self.norm,
            "entries": [
                {**divisor.to_dict(), "multiplicity": multiplicity}
                for divisor, multiplicity in self.entries
            ],
        }

    def __str__(self):
        """Default printer for DivisorFactorization"""
        s = "DivisorFactorization:\n"
        s += f"\tSubject: {self.subject}\n"
        s += f"\tNorm: {self.norm}\n"
        for divisor, multiplicity in self.entries:
            s += f"\t\t{divisor.label}^{multiplicity}\n"
        return s
