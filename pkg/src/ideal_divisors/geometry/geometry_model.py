# pylint: disable=invalid-name

"""
Exact rational models for circles, lines and chords of an ellipse.
"""

from enum import Enum
from fractions import Fraction
from math import gcd, lcm


def as_fraction(value, name="value"):
    """Exact rational from an int, Fraction or string such as "3/4" """
    if isinstance(value, float):
        raise ValueError(f"{name} must be exact, got float {value!r}")
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as err:
        raise ValueError(
            f"{name} is not a rational number: {value!r}"
        ) from err


def as_point(value, name="point"):
    """Pair of exact rationals"""
    if len(value) != 2:
        raise ValueError(f"{name} needs two coordinates, got {value!r}")
    return (as_fraction(value[0], name), as_fraction(value[1], name))


def format_fraction(value: Fraction):
    """JSON-ready rational: int when integral, "p/q" string otherwise"""
    if value.denominator == 1:
        return value.numerator
    return str(value)


class Circle:
    """
    Circle (x - cx)^2 + (y - cy)^2 = r_squared

    Attributes:
        center: pair of Fractions
        r_squared: positive Fraction
    """

    __slots__ = ("center", "r_squared")

    def __init__(self, center, r_squared):
        self.center = as_point(center, "center")
        self.r_squared = as_fraction(r_squared, "r_squared")
        if self.r_squared <= 0:
            raise ValueError(
                f"Squared radius must be positive, got {self.r_squared}"
            )

    def __eq__(self, other):
        if not isinstance(other, Circle):
            return NotImplemented
        return (self.center, self.r_squared) == (other.center, other.r_squared)

    def __hash__(self):
        return hash((self.center, self.r_squared))

    def __repr__(self):
        return f"Circle(center={self.center}, r_squared={self.r_squared})"


class Line:
    """
    Line a x + b y = c

    The triple is scaled to coprime integers with the first nonzero of
    (a, b) positive, so equal lines compare equal.

    Attributes:
        a, b, c: ints
    """

    __slots__ = ("a", "b", "c")

    def __init__(self, a, b, c):
        a, b, c = (as_fraction(v, "coefficient") for v in (a, b, c))
        if a == 0 and b == 0:
            raise ValueError(f"Not a line: {a} x + {b} y = {c}")
        scale = lcm(a.denominator, b.denominator, c.denominator)
        ints = [int(v * scale) for v in (a, b, c)]
        divisor = gcd(*ints)
        ints = [v // divisor for v in ints]
        if ints[0] < 0 or (ints[0] == 0 and ints[1] < 0):
            ints = [-v for v in ints]
        self.a, self.b, self.c = ints

    @property
    def normal(self):
        """Normal vector (a, b)"""
        return (self.a, self.b)

    @property
    def direction(self):
        """Direction vector (-b, a)"""
        return (-self.b, self.a)

    def contains(self, point):
        """True when the point lies on the line"""
        x, y = as_point(point)
        return self.a * x + self.b * y == self.c

    def to_dict(self):
        """JSON-ready description"""
        return {"a": self.a, "b": self.b, "c": self.c}

    def __eq__(self, other):
        if not isinstance(other, Line):
            return NotImplemented
        return (self.a, self.b, self.c) == (other.a, other.b, other.c)

    def __hash__(self):
        return hash((self.a, self.b, self.c))

    def __repr__(self):
        return f"Line({self.a} x + {self.b} y = {self.c})"


class CommonChord:
    """
    Common chord of two intersecting circles

    The endpoints are foot ± h n, with n the unit normal to the line of
    centers and h^2 = half_chord_sq; only h^2 is kept so everything
    stays rational.

    Attributes:
        line: Line through both intersection points
        foot: point where the chord crosses the line of centers
        abscissa: position of foot along the line of centers, 0 at the
            first center and 1 at the second
        half_chord_sq: squared half-distance between the points
    """

    # pylint: disable=too-few-public-methods
    def __init__(self, line, foot, abscissa, half_chord_sq):
        self.line = line
        self.foot = foot
        self.abscissa = abscissa
        self.half_chord_sq = half_chord_sq

    def to_dict(self):
        """JSON-ready description"""
        return {
            "line": self.line.to_dict(),
            "foot": [format_fraction(v) for v in self.foot],
            "abscissa": format_fraction(self.abscissa),
            "halfChordSq": format_fraction(self.half_chord_sq),
        }


class ChordKind(Enum):
    """Position of a vertical secant relative to the ellipse"""

    REAL = "real"
    IDEAL = "ideal"
    TANGENT = "tangent"


class ChordConfiguration:
    """
    Vertical secant x = x0 of the ellipse x^2/a^2 + y^2/b^2 = 1

    A = (-a, 0) and B = (a, 0) end the diameter AB conjugate to the
    secant direction; O = (x0, 0) is the chord midpoint and
    O' = (a^2/x0, 0) is where the tangents at its endpoints meet. For
    |x0| > a the chord is ideal: its endpoints (x0, ±y) lie on the
    supplementary conic x^2/a^2 - y^2/b^2 = 1.

    Use chord_configuration() to build one.

    Attributes:
        a_axis: semi-axis along x
        b_axis: semi-axis along y
        x0: abscissa of the secant, nonzero
        kind: ChordKind
        half_chord_sq: y^2 at the chord endpoints
    """

    # pylint: disable=too-many-arguments
    def __init__(self, a_axis, b_axis, x0, kind, half_chord_sq):
        self.a_axis = a_axis
        self.b_axis = b_axis
        self.x0 = x0
        self.kind = kind
        self.half_chord_sq = half_chord_sq

        assert self.point_o[1] == 0 and self.point_o_prime[1] == 0
        assert half_chord_sq >= 0, f"Negative half chord {half_chord_sq}"

    @property
    def kappa(self):
        """Section constant b^2 / a^2"""
        return self.b_axis**2 / self.a_axis**2

    @property
    def point_a(self):
        """A = (-a, 0)"""
        return (-self.a_axis, Fraction(0))

    @property
    def point_b(self):
        """B = (a, 0)"""
        return (self.a_axis, Fraction(0))

    @property
    def point_o(self):
        """O = (x0, 0)"""
        return (self.x0, Fraction(0))

    @property
    def point_o_prime(self):
        """O' = (a^2 / x0, 0)"""
        return (self.a_axis**2 / self.x0, Fraction(0))

    @property
    def midpoint(self):
        """Chord midpoint, equal to O"""
        return self.point_o

    @property
    def direction(self):
        """Chord direction"""
        return (Fraction(0), Fraction(1))

    def to_dict(self):
        """JSON-ready description"""
        return {
            "aAxis": format_fraction(self.a_axis),
            "bAxis": format_fraction(self.b_axis),
            "x0": format_fraction(self.x0),
            "kind": self.kind.value,
            "O": [format_fraction(v) for v in self.point_o],
            "Oprime": [format_fraction(v) for v in self.point_o_prime],
            "halfChordSq": format_fraction(self.half_chord_sq),
            "kappa": format_fraction(self.kappa),
        }

    def __str__(self):
        """Default printer for ChordConfiguration"""
        s = "ChordConfiguration:\n"
        s += f"\tSemi-axes: {self.a_axis}, {self.b_axis}\n"
        s += f"\tx0: {self.x0}\n"
        s += f"\tKind: {self.kind.value}\n"
        s += f"\tO': ({self.point_o_prime[0]}, 0)\n"
        s += f"\tHalf chord squared: {self.half_chord_sq}\n"
        return s
