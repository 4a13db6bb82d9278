# pylint: disable=invalid-name,too-many-arguments

"""
Data models for Gauss period systems
"""

from ideal_divisors.cyclotomic import CyclotomicInteger


class PeriodSystem:
    """
    The Gauss periods of a prime q with respect to the exponent λ

    q belongs to the exponent f modulo λ (q^f = 1 mod λ, f minimal)
    and λ - 1 = e f. With γ the least primitive root of λ, coset j is
    { γ^(k e + j) mod λ : k = 1..f } and the period η_j is the sum of
    α^t over coset j. Substituting α ↦ α^γ carries η_j to η_{j+1 mod e}.

    Use period_system() to build one; instances are cached.

    Attributes:
        lam: odd prime λ
        q: prime different from λ
        f: multiplicative order of q modulo λ
        e: number of periods, (λ - 1) / f
        gamma: least primitive root modulo λ
        cosets: tuple of e sorted tuples of f exponents
    """

    def __init__(self, lam, q, f, e, gamma, cosets):
        self.lam = lam
        self.q = q
        self.f = f
        self.e = e
        self.gamma = gamma
        self.cosets = tuple(tuple(sorted(c)) for c in cosets)

        assert e * f == lam - 1, f"e*f = {e * f} differs from {lam - 1}"
        assert pow(q, f, lam) == 1, f"{q}^{f} is not 1 mod {lam}"
        assert sorted(t for c in self.cosets for t in c) == list(
            range(1, lam)
        ), f"Cosets {self.cosets} do not partition 1..{lam - 1}"

    def period(self, j):
        """The period η_j as a CyclotomicInteger"""
        raw = [0] * self.lam
        for t in self.cosets[j % self.e]:
            raw[t] = 1
        return CyclotomicInteger(self.lam, raw)

    @property
    def periods(self):
        """All e periods η_0 ... η_{e-1}"""
        return [self.period(j) for j in range(self.e)]

    def __eq__(self, other):
        if not isinstance(other, PeriodSystem):
            return False
        return (self.lam, self.q) == (other.lam, other.q)

    def __hash__(self):
        return hash((self.lam, self.q))

    def __str__(self):
        """Default printer for PeriodSystem"""
        s = "PeriodSystem:\n"
        s += f"\tLambda: {self.lam}\n"
        s += f"\tq: {self.q}\n"
        s += f"\tf: {self.f}\n"
        s += f"\te: {self.e}\n"
        s += f"\tgamma: {self.gamma}\n"
        s += f"\tCosets: {self.cosets}\n"
        return s


class PeriodElement:
    """
    Integral combination c_0 η_0 + ... + c_{e-1} η_{e-1} of periods

    There is no separate constant term: a rational integer c is stored as
    -c (η_0 + ... + η_{e-1}), since the periods sum to -1.

    Attributes:
        coords: tuple of e integers
    """

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(int(c) for c in coords)

    @property
    def e(self):
        """Number of periods"""
        return len(self.coords)

    @classmethod
    def constant(cls, e, value):
        """The rational integer value"""
        return cls([-value] * e)

    def to_cyclotomic(self, ps: PeriodSystem) -> CyclotomicInteger:
        """Expand Σ c_j η_j into a CyclotomicInteger"""
        if self.e != ps.e:
            raise ValueError(
                f"Element has {self.e} coordinates, system has {ps.e} periods"
            )
        raw = [0] * ps.lam
        for c, coset in zip(self.coords, ps.cosets):
            for t in coset:
                raw[t] = c
        return CyclotomicInteger(ps.lam, raw)

    def __add__(self, other):
        return PeriodElement(
            a + b for a, b in zip(self.coords, other.coords, strict=True)
        )

    def __eq__(self, other):
        if not isinstance(other, PeriodElement):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"PeriodElement({list(self.coords)})"


class CongruenceAssignment:
    """
    Residues u_0 ... u_{e-1} modulo q substituted for the periods

    The map η_j ↦ u_j is a ring homomorphism from the period ring onto
    Z/q. Its e cyclic shifts η_j ↦ u_{j+s} are the assignments of the e
    conjugate divisors of q.

    Attributes:
        system: PeriodSystem
        u: tuple of e residues in [0, q)
    """

    def __init__(self, system: PeriodSystem, u):
        self.system = system
        self.u = tuple(int(x) for x in u)
        assert len(self.u) == system.e, (
            f"Assignment {self.u} does not have {system.e} entries"
        )

    def shifted(self, shift):
        """The tuple (u_shift, u_{shift+1}, ...)"""
        e = self.system.e
        return tuple(self.u[(j + shift) % e] for j in range(e))

    @property
    def has_repeated_roots(self):
        """True when two periods receive the same residue

        This happens only for the exceptional primes q dividing
        N(η_i - η_j); the shifted tuples stay pairwise distinct.
        """
        return len(set(self.u)) < len(self.u)

    def __eq__(self, other):
        if not isinstance(other, CongruenceAssignment):
            return False
        return self.system == other.system and self.u == other.u

    def __hash__(self):
        return hash((self.system, self.u))

    def __str__(self):
        return f"CongruenceAssignment(q={self.system.q}, u={self.u})"
