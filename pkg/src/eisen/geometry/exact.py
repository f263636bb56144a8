"""Exact arithmetic over Q(√3) and the rotations that act on it.

Coordinates of every figure point live in (Q + Q√3)²: each needed rotation
has rational cosine c and sine of the shape s·√3 with s rational, and such
rotations map the coordinate model to itself. Nothing here ever touches a
float; signs, equality and perfect-square checks are all exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from ..errors import NotRepresentable

Rationalish = Union[int, Fraction]


def rational_sqrt(q: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None if it is not a square."""
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class QSqrt3:
    """The number r + s·√3 with rational r, s; equality is componentwise."""

    r: Fraction
    s: Fraction

    @staticmethod
    def of(r: Rationalish, s: Rationalish = 0) -> QSqrt3:
        return QSqrt3(Fraction(r), Fraction(s))

    def __add__(self, other: QSqrt3) -> QSqrt3:
        return QSqrt3(self.r + other.r, self.s + other.s)

    def __sub__(self, other: QSqrt3) -> QSqrt3:
        return QSqrt3(self.r - other.r, self.s - other.s)

    def __neg__(self) -> QSqrt3:
        return QSqrt3(-self.r, -self.s)

    def __mul__(self, other: Union[QSqrt3, Rationalish]) -> QSqrt3:
        if isinstance(other, QSqrt3):
            return QSqrt3(
                self.r * other.r + 3 * self.s * other.s,
                self.r * other.s + self.s * other.r,
            )
        return QSqrt3(self.r * other, self.s * other)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.r == 0 and self.s == 0

    def is_rational(self) -> bool:
        return self.s == 0

    def sign(self) -> int:
        """Exact sign of r + s√3. Never needs a square root: for mixed signs,
        compare r² with 3s² (they cannot be equal, √3 being irrational)."""
        if self.s == 0:
            return (self.r > 0) - (self.r < 0)
        if self.r == 0:
            return 1 if self.s > 0 else -1
        if self.r > 0 and self.s > 0:
            return 1
        if self.r < 0 and self.s < 0:
            return -1
        bigger_rational = self.r * self.r > 3 * self.s * self.s
        dominant = self.r if bigger_rational else self.s
        return 1 if dominant > 0 else -1

    def __float__(self) -> float:
        return float(self.r) + float(self.s) * math.sqrt(3.0)

    def __str__(self) -> str:
        if self.s == 0:
            return str(self.r)
        if self.r == 0:
            return f"{self.s}√3"
        sign = "+" if self.s > 0 else "-"
        return f"{self.r} {sign} {abs(self.s)}√3"


QS_ZERO = QSqrt3.of(0)


@dataclass(frozen=True)
class Rotation:
    """Plane rotation with cos θ = c and sin θ = s·√3, both rational; c² + 3s² = 1."""

    c: Fraction
    s: Fraction

    def __post_init__(self) -> None:
        if self.c * self.c + 3 * self.s * self.s != 1:
            raise ValueError(f"not on the unit circle: c={self.c}, s={self.s}")

    @staticmethod
    def identity() -> Rotation:
        return Rotation(Fraction(1), Fraction(0))

    def inverse(self) -> Rotation:
        return Rotation(self.c, -self.s)


@dataclass(frozen=True)
class Point:
    x: QSqrt3
    y: QSqrt3

    def norm_sq(self) -> QSqrt3:
        return self.x * self.x + self.y * self.y

    def scaled(self, k: Rationalish) -> Point:
        return Point(self.x * k, self.y * k)


def apply_rotation(rot: Rotation, p: Point) -> Point:
    """Rotate p counterclockwise; preserves x² + y² exactly."""
    cos = QSqrt3.of(rot.c)
    sin = QSqrt3.of(0, rot.s)
    return Point(cos * p.x - sin * p.y, sin * p.x + cos * p.y)


def dist_sq(p: Point, q: Point) -> QSqrt3:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def rotation_from_chord(chord: int, radius_sq: Fraction) -> Rotation:
    """The counterclockwise rotation whose chord on a circle of squared radius
    radius_sq has the given length: cos θ = 1 - chord²/(2R²).

    sin θ must have the form s·√3 with rational s for the rotation to act on
    (Q + Q√3)² coordinates; if (1 - cos²θ)/3 is not a rational square the
    chord is not representable in this model and NotRepresentable is raised.
    """
    if chord <= 0:
        raise ValueError(f"chord must be positive, got {chord}")
    if Fraction(chord * chord) > 4 * radius_sq:
        raise ValueError(f"chord {chord} exceeds the diameter for R² = {radius_sq}")
    c = 1 - Fraction(chord * chord) / (2 * radius_sq)
    s = rational_sqrt((1 - c * c) / 3)
    if s is None:
        raise NotRepresentable(f"chord {chord} on R² = {radius_sq} needs an irrational sine/√3")
    return Rotation(c, s)
