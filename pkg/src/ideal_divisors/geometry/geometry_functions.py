# pylint: disable=invalid-name

"""
The radical axis against the common chord of two circles, and the
relations between real and ideal chords of an ellipse.

Everything is exact over the rationals; square roots never appear.
"""

import logging

from ideal_divisors.constants import LOGGER_NAME
from ideal_divisors.geometry.geometry_model import (
    ChordConfiguration,
    ChordKind,
    Circle,
    CommonChord,
    Line,
    as_fraction,
    as_point,
)

log = logging.getLogger(LOGGER_NAME)


def power_of_point(point, circle: Circle):
    """
    |point - center|^2 - r^2

    :param point: pair of rationals
    :param circle: Circle
    :return: Fraction, negative inside the circle
    """
    x, y = as_point(point)
    cx, cy = circle.center
    return (x - cx) ** 2 + (y - cy) ** 2 - circle.r_squared


def _check_not_concentric(c1: Circle, c2: Circle):
    if c1.center == c2.center:
        raise ValueError(f"Concentric circles at {c1.center} have no axis")


def radical_axis(c1: Circle, c2: Circle) -> Line:
    """
    The locus of points with equal power with respect to both circles

    It exists for every pair with distinct centers, whether or not the
    circles meet.

    :param c1: Circle
    :param c2: Circle
    :return: Line
    """
    _check_not_concentric(c1, c2)
    (x1, y1), (x2, y2) = c1.center, c2.center
    return Line(
        2 * (x2 - x1),
        2 * (y2 - y1),
        (x2**2 + y2**2 - c2.r_squared) - (x1**2 + y1**2 - c1.r_squared),
    )


def common_chord_line(c1: Circle, c2: Circle):
    """
    The line through the two intersection points of the circles

    :param c1: Circle
    :param c2: Circle
    :return: CommonChord, or None unless the circles meet in two points
    """
    _check_not_concentric(c1, c2)
    (x1, y1), (x2, y2) = c1.center, c2.center
    dx, dy = x2 - x1, y2 - y1
    d_sq = dx**2 + dy**2
    s = (d_sq + c1.r_squared - c2.r_squared) / (2 * d_sq)
    half_chord_sq = c1.r_squared - s**2 * d_sq
    if half_chord_sq <= 0:
        log.debug(
            "common_chord_line: no two-point intersection, h^2 = %s",
            half_chord_sq,
        )
        return None

    foot = (x1 + s * dx, y1 + s * dy)
    line = Line(dx, dy, dx * foot[0] + dy * foot[1])
    return CommonChord(line, foot, s, half_chord_sq)


def endpoint_power(chord: CommonChord, circle: Circle):
    """
    Power of the chord endpoints foot ± h n with respect to circle

    Both endpoints have the same power since n is normal to the line of
    centers: |foot - center|^2 + h^2 - r^2.
    """
    return power_of_point(chord.foot, circle) + chord.half_chord_sq


def chord_configuration(a_axis, b_axis, x0) -> ChordConfiguration:
    """
    The vertical secant x = x0 of x^2/a^2 + y^2/b^2 = 1

    :param a_axis: positive rational semi-axis along x
    :param b_axis: positive rational semi-axis along y
    :param x0: nonzero rational
    :return: ChordConfiguration
    """
    a_axis = as_fraction(a_axis, "a_axis")
    b_axis = as_fraction(b_axis, "b_axis")
    x0 = as_fraction(x0, "x0")
    if a_axis <= 0 or b_axis <= 0:
        raise ValueError(f"Semi-axes must be positive, got {a_axis}, {b_axis}")
    if x0 == 0:
        raise ValueError("x0 = 0 puts the pole of the secant at infinity")

    if abs(x0) < a_axis:
        kind = ChordKind.REAL
    elif abs(x0) > a_axis:
        kind = ChordKind.IDEAL
    else:
        kind = ChordKind.TANGENT
    half_chord_sq = b_axis**2 / a_axis**2 * abs(a_axis**2 - x0**2)
    return ChordConfiguration(a_axis, b_axis, x0, kind, half_chord_sq)


def verify_section_relation(cfg: ChordConfiguration) -> bool:
    """
    O'A · OB = O'B · OA, i.e. O and O' divide AB in the same ratio

    :param cfg: ChordConfiguration, not TANGENT
    :return: bool
    """
    if cfg.kind == ChordKind.TANGENT:
        raise ValueError("O and O' coincide for a tangent secant")
    xa, xb = cfg.point_a[0], cfg.point_b[0]
    xo, xp = cfg.point_o[0], cfg.point_o_prime[0]
    return abs(xp - xa) * abs(xo - xb) == abs(xp - xb) * abs(xo - xa)


def verify_chord_power_relation(cfg: ChordConfiguration) -> bool:
    """
    OM^2 = κ · OA · OB

    OM^2 is recomputed from the ellipse (REAL) or the supplementary
    conic (IDEAL) and compared with κ |OA · OB|.
    """
    a_sq, b_sq = cfg.a_axis**2, cfg.b_axis**2
    x0_sq = cfg.x0**2
    if cfg.kind == ChordKind.IDEAL:
        om_sq = b_sq * (x0_sq / a_sq - 1)
    else:
        om_sq = b_sq * (1 - x0_sq / a_sq)
    oa = cfg.point_o[0] - cfg.point_a[0]
    ob = cfg.point_o[0] - cfg.point_b[0]
    return om_sq == cfg.half_chord_sq == cfg.kappa * abs(oa * ob)


def polar_line(cfg: ChordConfiguration) -> Line:
    """The secant x = a^2/x0 through O'

    It is ideal when cfg is real and real when cfg is ideal.
    """
    return Line(1, 0, cfg.point_o_prime[0])


def verify_tangent_meeting(cfg: ChordConfiguration) -> bool:
    """
    The tangents at the chord endpoints (x0, ±y) pass through O'

    Tangent at (x0, y1): x x0 / a^2 ± y y1 / b^2 = 1, with + on the
    ellipse (REAL) and - on the supplementary conic (IDEAL). O' has
    y = 0, so y1 drops out and no square root is needed.
    """
    if cfg.kind == ChordKind.TANGENT:
        raise ValueError("A tangent secant has a single endpoint")
    xp, yp = cfg.point_o_prime
    assert yp == 0
    return xp * cfg.x0 / cfg.a_axis**2 == 1


def verify_supplementary_conic(cfg: ChordConfiguration) -> bool:
    """
    REAL or TANGENT: (x0, ±y) lies on x^2/a^2 + y^2/b^2 = 1.
    IDEAL: it lies on x^2/a^2 - y^2/b^2 = 1.
    """
    sign = -1 if cfg.kind == ChordKind.IDEAL else 1
    return (
        cfg.x0**2 / cfg.a_axis**2 + sign * cfg.half_chord_sq / cfg.b_axis**2
        == 1
    )


def signed_chord_power(cfg: ChordConfiguration):
    """
    κ (x0 - (-a)) (x0 - a) with signed positions

    -half_chord_sq for a real chord, +half_chord_sq for an ideal one.
    """
    return cfg.kappa * (cfg.x0 + cfg.a_axis) * (cfg.x0 - cfg.a_axis)
