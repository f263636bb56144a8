"""The M ∪ N parametrization of x² + xy + y² = z², with a brute-force oracle.

For coprime b > a >= 1 the generator

    M(a, b) = (b² - a², a² + 2ab, a² + ab + b²)

always solves the equation, and when a ≡ b (mod 3) every component is
divisible by 3, giving the second family N(a, b) = M(a, b)/3. Whether
M ∪ N really is *all* positive solutions is exactly what
verify_parametrization measures against the oracle; imprimitive solutions
such as (6, 10, 14) are reported, not assumed covered.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from math import gcd, isqrt
from typing import Optional

from .errors import InvalidParams, NonDivisible
from .solvers import brute_force_solutions


class Origin(enum.Enum):
    M = "M"
    N = "N"
    BRUTE_FORCE = "brute-force"


@dataclass(frozen=True)
class ParamPair:
    """Generator parameters: coprime (a, b) with b > a >= 1."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 1 or self.b <= self.a:
            raise InvalidParams(f"need b > a >= 1, got ({self.a}, {self.b})")
        if gcd(self.a, self.b) != 1:
            raise InvalidParams(f"({self.a}, {self.b}) not coprime")


@dataclass(frozen=True)
class Triple:
    """Positive (x, y, z) with x² + xy + y² = z², tagged with where it came from."""

    x: int
    y: int
    z: int
    origin: Origin
    params: Optional[tuple[int, int]] = None

    def form_holds(self) -> bool:
        return self.x * self.x + self.x * self.y + self.y * self.y == self.z * self.z

    @property
    def primitive(self) -> bool:
        return gcd(self.x, self.y) == 1

    def key(self) -> tuple[int, int, int]:
        """Unordered-in-(x, y) identity, used for set comparison."""
        return (self.z, min(self.x, self.y), max(self.x, self.y))


def m_triple(p: ParamPair) -> Triple:
    """(b² - a², a² + 2ab, a² + ab + b²) in that order (x <= y not enforced)."""
    a, b = p.a, p.b
    return Triple(b * b - a * a, a * a + 2 * a * b, a * a + a * b + b * b, Origin.M, (a, b))


def n_triple(p: ParamPair) -> Triple:
    """The M formulas divided by 3; requires a ≡ b (mod 3), which makes 3 divide each."""
    if p.a % 3 != p.b % 3:
        raise InvalidParams(f"({p.a}, {p.b}) needs a ≡ b (mod 3)")
    m = m_triple(p)
    if m.x % 3 or m.y % 3 or m.z % 3:
        raise NonDivisible(f"component of {m} not divisible by 3")
    return Triple(m.x // 3, m.y // 3, m.z // 3, Origin.N, (p.a, p.b))


def enumerate_triples(z_max: int) -> list[Triple]:
    """All M and N triples with z <= z_max, normalized to x <= y, deduplicated.

    Parameters satisfy a² + ab + b² <= 3·z_max (the N scaling is the weaker
    bound); since b > a that gives a² < z_max and a per-a bound on b from the
    discriminant. Sorted by (z, x); when M and N emit the same unordered
    triple the first-generated (M) tag is kept.
    """
    if z_max < 1:
        raise ValueError(f"need z_max >= 1, got {z_max}")
    seen: dict[tuple[int, int, int], Triple] = {}

    def record(t: Triple) -> None:
        normalized = Triple(min(t.x, t.y), max(t.x, t.y), t.z, t.origin, t.params)
        seen.setdefault(normalized.key(), normalized)

    limit = 3 * z_max
    for a in range(1, isqrt(z_max) + 1):
        b_max = (isqrt(4 * limit - 3 * a * a) - a) // 2
        for b in range(a + 1, b_max + 1):
            if gcd(a, b) != 1:
                continue
            form = a * a + a * b + b * b
            pair = ParamPair(a, b)
            if form <= z_max:
                record(m_triple(pair))
            if a % 3 == b % 3 and form <= limit:
                record(n_triple(pair))
    return sorted(seen.values(), key=Triple.key)


def brute_force_triples(z_max: int) -> list[Triple]:
    """Every (x, y, z) with x <= y and z <= z_max, via the quadratic-form oracle."""
    if z_max < 1:
        raise ValueError(f"need z_max >= 1, got {z_max}")
    out = []
    for z in range(1, z_max + 1):
        for a, b in brute_force_solutions(z * z):
            out.append(Triple(a, b, z, Origin.BRUTE_FORCE))
    return out


@dataclass
class CoverageReport:
    """How the M ∪ N enumeration compares to brute force up to z_max."""

    z_max: int
    generated: list[Triple]
    brute: list[Triple]
    missing: list[Triple] = field(default_factory=list)
    unsound: list[Triple] = field(default_factory=list)

    @property
    def missing_primitive(self) -> list[Triple]:
        return [t for t in self.missing if t.primitive]

    @property
    def missing_imprimitive(self) -> list[Triple]:
        return [t for t in self.missing if not t.primitive]

    def to_dict(self) -> dict:
        return {
            "z_max": self.z_max,
            "generated_count": len(self.generated),
            "brute_count": len(self.brute),
            "missing": [
                {"x": t.x, "y": t.y, "z": t.z, "primitive": t.primitive} for t in self.missing
            ],
            "unsound": [{"x": t.x, "y": t.y, "z": t.z} for t in self.unsound],
        }

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def verify_parametrization(z_max: int) -> CoverageReport:
    """Compare enumerate_triples against brute force up to z_max.

    `unsound` (generated triples failing the form identity) must always be
    empty; `missing` lists oracle solutions M ∪ N did not produce, split by
    primitivity via the per-triple flag.
    """
    generated = enumerate_triples(z_max)
    brute = brute_force_triples(z_max)
    generated_keys = {t.key() for t in generated}
    missing = [t for t in brute if t.key() not in generated_keys]
    unsound = [t for t in generated if not t.form_holds()]
    return CoverageReport(z_max, generated, brute, missing, unsound)
