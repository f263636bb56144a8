"""Coprime positive solutions of a² + ab + b² = rⁿ.

Two independent construction routes are provided and cross-checked:

* powers of an Eisenstein element of norm r (for r = 7 the generator is
  pinned to 2 + ω, whose powers reproduce the classical table of
  (aₙ, bₙ) values), together with the equivalent coupled recurrence
  aₙ₊₁ = 2aₙ - bₙ, bₙ₊₁ = aₙ + 3bₙ;

* an elementary ascent that multiplies the form value by 7 at each step
  using one of the three maps (2b-a, 3a+b), (b-2a, 3a+2b), (2a-b, a+3b),
  choosing by a fixed mod-7 case analysis, generalized to arbitrary
  representable bases via Z[ω] multiplication.

`brute_force_solutions` is the exhaustive oracle everything is tested
against; it shares no code with either construction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd, isqrt
from typing import NamedTuple, Optional, Sequence

from .errors import Degenerate, InvariantViolation, NoRepresentation
from .ring import EisensteinInt, form_value


class Method(enum.Enum):
    """How a solution pair was produced."""

    EISENSTEIN_POWER = "power"
    RECURRENCE = "recurrence"
    DESCENT = "descent"


@dataclass(frozen=True)
class SolutionPair:
    """A pair (a, b) with a² + ab + b² = base**exponent, possibly signed.

    For exponent >= 1 the pair is coprime; signs are whatever the producing
    method yields (Eisenstein powers go negative from n = 4 on).
    """

    base: int
    exponent: int
    a: int
    b: int
    method: Method

    def form_value(self) -> int:
        return form_value(self.a, self.b)

    def is_coprime(self) -> bool:
        return gcd(self.a, self.b) == 1

    def normalized(self) -> "PositivePair":
        return normalize_positive(self.a, self.b, provenance=self)


@dataclass(frozen=True)
class PositivePair:
    """Sign-normalized solution with nonnegative coordinates; for coprime
    solutions of base**exponent both are positive except (1, 0) at exponent 0.

    `provenance` is the SolutionPair this was derived from, when there is a
    single one (pairs obtained by scaling carry None).
    """

    A: int
    B: int
    provenance: Optional[SolutionPair] = None

    def form_value(self) -> int:
        return form_value(self.A, self.B)

    def is_coprime(self) -> bool:
        return gcd(self.A, self.B) == 1

    def as_sorted_tuple(self) -> tuple[int, int]:
        return (self.A, self.B) if self.A <= self.B else (self.B, self.A)


class FormPair(NamedTuple):
    """Unordered positive solution (a <= b) of a² + ab + b² = N, with its gcd."""

    a: int
    b: int

    @property
    def gcd(self) -> int:
        return gcd(self.a, self.b)


def base_solution(r: int) -> SolutionPair:
    """Smallest coprime positive (a, b), a <= b, with a² + ab + b² = r.

    Scans a = 1..isqrt(r/3) (a <= b forces 3a² <= r) and solves the quadratic
    in b exactly via the discriminant 4r - 3a². Raises NoRepresentation if no
    coprime pair exists, e.g. for primes ≡ 2 mod 3.
    """
    if r < 3:
        raise NoRepresentation(f"{r} has no positive representation a^2+ab+b^2")
    for a in range(1, isqrt(r // 3) + 1):
        disc = 4 * r - 3 * a * a
        s = isqrt(disc)
        if s * s != disc or (s - a) % 2:
            continue
        b = (s - a) // 2
        if b >= a and gcd(a, b) == 1:
            return SolutionPair(base=r, exponent=1, a=a, b=b, method=Method.DESCENT)
    raise NoRepresentation(f"{r} has no coprime representation a^2+ab+b^2")


def eisenstein_solution(p: int, n: int) -> SolutionPair:
    """Coefficients of (a₀ + b₀ω)ⁿ where a₀² + a₀b₀ + b₀² = p.

    The base element is 2 + ω for p = 7 (the generator whose powers give the
    classical table) and the lexicographically smallest representation
    otherwise. Intended for p = 7 or primes p ≡ 1 mod 6; propagates
    NoRepresentation for anything not expressible.
    """
    if n < 0:
        raise ValueError(f"exponent must be >= 0, got {n}")
    if p == 7:
        root = EisensteinInt(2, 1)
    else:
        base = base_solution(p)
        root = EisensteinInt(base.a, base.b)
    z = root**n
    return SolutionPair(base=p, exponent=n, a=z.re, b=z.om, method=Method.EISENSTEIN_POWER)


def recurrence_solution(n: int) -> SolutionPair:
    """(aₙ, bₙ) for base 7 via aₙ₊₁ = 2aₙ - bₙ, bₙ₊₁ = aₙ + 3bₙ from (1, 0).

    This iterates multiplication by 2 + ω coefficientwise and must agree with
    eisenstein_solution(7, n) exactly.
    """
    if n < 0:
        raise ValueError(f"exponent must be >= 0, got {n}")
    a, b = 1, 0
    for _ in range(n):
        a, b = 2 * a - b, a + 3 * b
    return SolutionPair(base=7, exponent=n, a=a, b=b, method=Method.RECURRENCE)


def solution_table(n_max: int) -> list[SolutionPair]:
    """Rows n = 0..n_max of the base-7 sequence, in one linear pass."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    rows = []
    a, b = 1, 0
    for n in range(n_max + 1):
        rows.append(SolutionPair(base=7, exponent=n, a=a, b=b, method=Method.RECURRENCE))
        a, b = 2 * a - b, a + 3 * b
    return rows


def second_order_check(seq: Sequence[int]) -> bool:
    """True iff every window of seq satisfies xₙ₊₂ = 5xₙ₊₁ - 7xₙ.

    Both the a- and the b-sequence of the base-7 table satisfy this: the step
    matrix [[2, -1], [1, 3]] has characteristic polynomial λ² - 5λ + 7.
    """
    if len(seq) < 3:
        raise ValueError("need at least 3 terms to check the recurrence")
    return all(seq[i + 2] == 5 * seq[i + 1] - 7 * seq[i] for i in range(len(seq) - 2))


def normalize_positive(a: int, b: int, provenance: Optional[SolutionPair] = None) -> PositivePair:
    """Map a signed solution to a positive one with the same form value.

    Both nonnegative: unchanged. Both nonpositive: negate. Mixed signs with
    positive part p and negative part of absolute value q: (p - q, q) if
    p > q, else (q - p, p); either way the form value and any coprimality
    are preserved. Mixed signs with p = q have no positive counterpart and
    raise Degenerate.
    """
    if a == 0 and b == 0:
        raise ValueError("(0, 0) cannot be normalized")
    if a >= 0 and b >= 0:
        return PositivePair(a, b, provenance)
    if a <= 0 and b <= 0:
        return PositivePair(-a, -b, provenance)
    pos, neg = (a, -b) if a > 0 else (b, -a)
    if pos == neg:
        raise Degenerate(f"mixed-sign pair ({a}, {b}) with equal magnitudes")
    if pos > neg:
        return PositivePair(pos - neg, neg, provenance)
    return PositivePair(neg - pos, pos, provenance)


def descent_step(a: int, b: int, p: int = 7) -> tuple[int, int]:
    """One ascent step: coprime positive (a, b) with form 7ⁿ to one with form 7ⁿ⁺¹.

    With a < b (swapped internally if needed), each of

        (c₁, d₁) = (2b - a, 3a + b)
        (c₂, d₂) = (b - 2a, 3a + 2b)
        (c₃, d₃) = (2a - b, a + 3b)

    multiplies the form value by 7. (c₁, d₁) is taken when 7 ∤ c₁; otherwise
    7 | 2b - a forces 7 ∤ 2a - b, and (c₂, d₂) applies when 2a - b < 0,
    (c₃, d₃) when 2a - b > 0. The result is verified before returning;
    a failed verification raises InvariantViolation (a bug, per the case
    analysis it cannot fail for valid input).
    """
    if p != 7:
        raise ValueError("the three-map case analysis is specific to base 7")
    if a <= 0 or b <= 0:
        raise ValueError(f"need positive inputs, got ({a}, {b})")
    if a % 7 == 0 or b % 7 == 0:
        raise ValueError(f"inputs must be prime to 7, got ({a}, {b})")
    if a > b:
        a, b = b, a

    c1 = 2 * b - a
    if c1 % 7:
        c, d = c1, 3 * a + b
    elif 2 * a - b < 0:
        c, d = b - 2 * a, 3 * a + 2 * b
    elif 2 * a - b > 0:
        c, d = 2 * a - b, a + 3 * b
    else:
        raise InvariantViolation(f"2a = b with 7 | 2b - a at ({a}, {b})")

    if (
        c <= 0
        or d <= 0
        or c % 7 == 0
        or gcd(c, d) != 1
        or form_value(c, d) != 7 * form_value(a, b)
    ):
        raise InvariantViolation(f"descent step produced invalid ({c}, {d}) from ({a}, {b})")
    return c, d


def ascend(r: int, n: int) -> SolutionPair:
    """Coprime positive solution of a² + ab + b² = rⁿ by stepwise ascent.

    For r = 7 this iterates descent_step from (1, 2). For general
    representable r each step multiplies the current element of Z[ω] by the
    base element or its conjugate, normalizes signs, and keeps the first
    coprime candidate.
    """
    if n < 1:
        raise ValueError(f"exponent must be >= 1, got {n}")
    if r == 7:
        a, b = 1, 2
        for _ in range(n - 1):
            a, b = descent_step(a, b)
        return SolutionPair(base=7, exponent=n, a=a, b=b, method=Method.DESCENT)

    base = base_solution(r)
    root = EisensteinInt(base.a, base.b)
    current = root
    for _ in range(n - 1):
        for candidate in (current * root, current * root.conjugate()):
            try:
                pair = normalize_positive(candidate.re, candidate.om)
            except Degenerate:
                continue
            if pair.A > 0 and pair.B > 0 and pair.is_coprime():
                current = EisensteinInt(pair.A, pair.B)
                break
        else:
            raise InvariantViolation(
                f"no coprime candidate ascending base {r} at norm {current.norm()}"
            )
    return SolutionPair(base=r, exponent=n, a=current.re, b=current.om, method=Method.DESCENT)


def corollary_solutions(n: int) -> list[PositivePair]:
    """n distinct positive solutions of a² + ab + b² = 7²ⁿ.

    Built recursively: the n-1 solutions for 7^(2n-2) scaled by 7, plus the
    coprime pair from ascend(7, 2n). Exactly one returned pair is coprime.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    solutions: list[PositivePair] = []
    for k in range(1, n + 1):
        solutions = [PositivePair(7 * s.A, 7 * s.B) for s in solutions]
        solutions.append(ascend(7, 2 * k).normalized())
    return solutions


def brute_force_solutions(n: int) -> list[FormPair]:
    """All positive (a, b) with a <= b and a² + ab + b² = N, by exhaustive scan.

    The oracle path: a runs from 1 to isqrt(N/3) and b is solved exactly from
    the discriminant 4N - 3a² (math.isqrt, no floating point). Sorted
    ascending.
    """
    if n < 1:
        raise ValueError(f"need N >= 1, got {n}")
    found = []
    for a in range(1, isqrt(n // 3) + 1):
        disc = 4 * n - 3 * a * a
        s = isqrt(disc)
        if s * s != disc or (s - a) % 2:
            continue
        b = (s - a) // 2
        if b >= a:
            found.append(FormPair(a, b))
    return found
