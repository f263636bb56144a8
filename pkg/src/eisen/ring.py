"""Exact arithmetic in the Eisenstein ring Z[ω], ω = (1 + √-3)/2.

Elements are stored as integer pairs (re, om) meaning re + om·ω. Every
formula below follows from ω² = ω - 1, and the norm

    N(a + bω) = a² + ab + b²

is multiplicative, which is what makes this ring useful for producing
solutions of a² + ab + b² = 7ⁿ and friends. Coefficients are plain Python
ints, so there is no overflow at any exponent.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class EisensteinInt:
    """An element re + om·ω of Z[ω], with ω = (1 + √-3)/2 and ω² = ω - 1."""

    re: int
    om: int

    def __add__(self, other: EisensteinInt) -> EisensteinInt:
        return EisensteinInt(self.re + other.re, self.om + other.om)

    def __sub__(self, other: EisensteinInt) -> EisensteinInt:
        return EisensteinInt(self.re - other.re, self.om - other.om)

    def __neg__(self) -> EisensteinInt:
        return EisensteinInt(-self.re, -self.om)

    def __mul__(self, other: EisensteinInt) -> EisensteinInt:
        # (a + bω)(c + dω) = ac + (ad + bc)ω + bdω², and ω² = ω - 1
        a, b = self.re, self.om
        c, d = other.re, other.om
        return EisensteinInt(a * c - b * d, a * d + b * c + b * d)

    def __pow__(self, n: int) -> EisensteinInt:
        """Binary exponentiation; n must be >= 0 (no division in Z[ω] here)."""
        if n < 0:
            raise ValueError(f"negative exponent {n} not supported")
        result = EisensteinInt(1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> EisensteinInt:
        """Complex conjugate: since ω̄ = 1 - ω, conj(a + bω) = (a + b) - bω."""
        return EisensteinInt(self.re + self.om, -self.om)

    def norm(self) -> int:
        """N(a + bω) = a² + ab + b² = (a + bω)·conj(a + bω); always >= 0."""
        a, b = self.re, self.om
        return a * a + a * b + b * b

    def is_zero(self) -> bool:
        return self.re == 0 and self.om == 0

    def __str__(self) -> str:
        if self.om == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.om}ω"
        sign = "+" if self.om > 0 else "-"
        return f"{self.re} {sign} {abs(self.om)}ω"


ONE = EisensteinInt(1, 0)
OMEGA = EisensteinInt(0, 1)


def form_value(a: int, b: int) -> int:
    """The quadratic form a² + ab + b², i.e. the norm of a + bω."""
    return a * a + a * b + b * b
