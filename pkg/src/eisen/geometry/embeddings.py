"""Concyclic integer-distance point sets: the K2,2,2 and K3,3,3 figures.

Both figures inscribe equilateral triangles in a circle whose squared radius
makes the triangle side an integer (side = R√3), then place further
triangles by exact rotations chosen so that *every* pairwise distance is an
integer. Orientation of each added triangle is found by deterministic
search over the two rotation directions, validated against the full
expected-distance table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Optional

from ..errors import ConstructionFailed, InvariantViolation, NotConcyclic
from .exact import Point, QSqrt3, Rotation, apply_rotation, dist_sq, rational_sqrt, rotation_from_chord

PairKey = tuple[str, str]


def pair_key(a: str, b: str) -> PairKey:
    return (a, b) if a <= b else (b, a)


def integer_distance(p: Point, q: Point) -> Optional[int]:
    """The distance |pq| when it is an integer, else None (exactly decided)."""
    d2 = dist_sq(p, q)
    if not d2.is_rational():
        return None
    root = rational_sqrt(d2.r)
    if root is None or root.denominator != 1:
        return None
    return root.numerator


@dataclass(frozen=True)
class Embedding:
    """Labeled points on one circle plus the expected integer distance table."""

    radius_sq: Fraction
    points: dict[str, Point]
    expected: dict[PairKey, int]

    def labels(self) -> list[str]:
        return sorted(self.points)

    def off_circle(self) -> list[str]:
        r2 = QSqrt3.of(self.radius_sq)
        return [name for name, p in self.points.items() if p.norm_sq() != r2]

    def expected_failures(self) -> list[str]:
        bad = []
        for (a, b), want in sorted(self.expected.items()):
            got = integer_distance(self.points[a], self.points[b])
            if got != want:
                bad.append(f"{a}-{b}: expected {want}, got {got}")
        return bad

    def distance_matrix(self) -> dict[PairKey, int]:
        """All pairwise distances; raises if any is not an integer."""
        matrix = {}
        for a, b in itertools.combinations(self.labels(), 2):
            d = integer_distance(self.points[a], self.points[b])
            if d is None:
                raise InvariantViolation(f"pair {a}-{b} has non-integer distance")
            matrix[(a, b)] = d
        return matrix


# expected tables, built family by family (triangle sides, then cross-chords)

def _family(table: dict[PairKey, int], l1: str, l2: str, pairs: Iterable[tuple[int, int]], d: int) -> None:
    for i, j in pairs:
        table[pair_key(f"{l1}{i}", f"{l2}{j}")] = d


def _sides(table: dict[PairKey, int], letter: str, d: int) -> None:
    _family(table, letter, letter, [(1, 2), (1, 3), (2, 3)], d)


def _k222_expected() -> dict[PairKey, int]:
    t: dict[PairKey, int] = {}
    _sides(t, "A", 7)
    _sides(t, "B", 7)
    _family(t, "A", "B", [(1, 1), (2, 2), (3, 3)], 3)
    _family(t, "A", "B", [(2, 1), (3, 2), (1, 3)], 5)
    _family(t, "A", "B", [(1, 2), (2, 3), (3, 1)], 8)
    return t


def _k333_expected() -> dict[PairKey, int]:
    t: dict[PairKey, int] = {}
    for letter in "ABC":
        _sides(t, letter, 49)
    _family(t, "A", "B", [(1, 1), (2, 2), (3, 3)], 21)
    _family(t, "A", "B", [(2, 1), (3, 2), (1, 3)], 35)
    _family(t, "A", "B", [(1, 2), (2, 3), (3, 1)], 56)
    _family(t, "A", "C", [(1, 1), (2, 2), (3, 3)], 39)
    _family(t, "A", "C", [(1, 3), (2, 1), (3, 2)], 16)
    _family(t, "A", "C", [(1, 2), (2, 3), (3, 1)], 55)
    _family(t, "B", "C", [(1, 1), (2, 2), (3, 3)], 21)
    _family(t, "B", "C", [(2, 1), (3, 2), (1, 3)], 35)
    _family(t, "B", "C", [(1, 2), (2, 3), (3, 1)], 56)
    return t


K222_EXPECTED = _k222_expected()
K333_EXPECTED = _k333_expected()


def _equilateral(top: Point, rot120: Rotation) -> list[Point]:
    second = apply_rotation(rot120, top)
    return [top, second, apply_rotation(rot120, second)]


def build_k222() -> Embedding:
    """Six points on R² = 49/3: two interleaved side-7 equilateral triangles.

    A1 sits at the top (0, R); the B triangle is the A triangle rotated by
    the chord-3 angle, in whichever direction realizes the expected table
    (A_kB_k = 3, B_kA_{k+1} = 5, A_kB_{k+1} = 8, all sides 7).
    """
    radius_sq = Fraction(49, 3)
    top = Point(QSqrt3.of(0), QSqrt3.of(0, Fraction(7, 3)))
    rot120 = rotation_from_chord(7, radius_sq)
    a_pts = _equilateral(top, rot120)
    rot3 = rotation_from_chord(3, radius_sq)
    for rot in (rot3, rot3.inverse()):
        points = {f"A{k}": p for k, p in enumerate(a_pts, 1)}
        points |= {f"B{k}": apply_rotation(rot, p) for k, p in enumerate(a_pts, 1)}
        embedding = Embedding(radius_sq, points, K222_EXPECTED)
        if not embedding.expected_failures():
            return embedding
    raise ConstructionFailed("no orientation of the B triangle matches the distance table")


def build_k333() -> Embedding:
    """Nine points on R² = 2401/3: the K2,2,2 figure scaled by 7 plus a C triangle.

    C_k is attached to A_{k+1} by the chord-16 rotation (so A2C1 = A3C2 =
    A1C3 = 16), oriented so that the opposite chords come out 39; the
    remaining 55/21/35/56 distances then follow and are verified exactly.
    """
    radius_sq = Fraction(2401, 3)
    base = build_k222()
    points = {name: p.scaled(7) for name, p in base.points.items()}
    a_pts = {k: points[f"A{k}"] for k in (1, 2, 3)}
    attach = {1: 2, 2: 3, 3: 1}
    rot16 = rotation_from_chord(16, radius_sq)
    for rot in (rot16, rot16.inverse()):
        candidate = dict(points)
        candidate |= {f"C{k}": apply_rotation(rot, a_pts[attach[k]]) for k in (1, 2, 3)}
        embedding = Embedding(radius_sq, candidate, K333_EXPECTED)
        if not embedding.expected_failures():
            return embedding
    raise ConstructionFailed("no orientation of the C triangle matches the distance table")


def _angle_class(p: Point) -> int:
    """Counterclockwise octant index starting at the positive x-axis."""
    sx, sy = p.x.sign(), p.y.sign()
    if sx == 0 and sy == 0:
        raise NotConcyclic("origin does not lie on a circle of positive radius")
    ordering = {
        (1, 0): 0, (1, 1): 1, (0, 1): 2, (-1, 1): 3,
        (-1, 0): 4, (-1, -1): 5, (0, -1): 6, (1, -1): 7,
    }
    return ordering[(sx, sy)]


def circular_order(points: list[Point]) -> list[int]:
    """Indices of the points sorted counterclockwise by exact angle.

    All points must share one squared radius (NotConcyclic otherwise). Angle
    comparison uses the octant class and, within a class, the sign of the
    cross product; no floating point anywhere.
    """
    if not points:
        return []
    r2 = points[0].norm_sq()
    for p in points[1:]:
        if p.norm_sq() != r2:
            raise NotConcyclic("points lie on different circles")

    def compare(i: int, j: int) -> int:
        ci, cj = _angle_class(points[i]), _angle_class(points[j])
        if ci != cj:
            return ci - cj
        cross = points[i].x * points[j].y - points[i].y * points[j].x
        return -cross.sign()

    return sorted(range(len(points)), key=cmp_to_key(compare))


def ptolemy_check(p1: Point, p2: Point, p3: Point, p4: Point) -> bool:
    """Ptolemy's identity for four concyclic points given in circular order:
    |p1p3|·|p2p4| = |p1p2|·|p3p4| + |p1p4|·|p2p3|.

    When all six distances are rational the products are compared as exact
    rationals; otherwise the identity x = y + z is decided on squared
    quantities via x² - y² - z² >= 0 and (x² - y² - z²)² = 4y²z², which never
    extracts a square root.
    """
    quad = (p1, p2, p3, p4)
    r2 = p1.norm_sq()
    if any(p.norm_sq() != r2 for p in quad[1:]):
        raise NotConcyclic("points lie on different circles")
    for a, b in itertools.combinations(quad, 2):
        if a == b:
            raise NotConcyclic("repeated point")

    d13, d24 = dist_sq(p1, p3), dist_sq(p2, p4)
    d12, d34 = dist_sq(p1, p2), dist_sq(p3, p4)
    d14, d23 = dist_sq(p1, p4), dist_sq(p2, p3)

    def rational_root(v: QSqrt3) -> Optional[Fraction]:
        return rational_sqrt(v.r) if v.is_rational() else None

    roots = [rational_root(v) for v in (d13, d24, d12, d34, d14, d23)]
    if all(r is not None for r in roots):
        r13, r24, r12, r34, r14, r23 = roots
        return r13 * r24 == r12 * r34 + r14 * r23

    x2 = d13 * d24
    y2 = d12 * d34
    z2 = d14 * d23
    diff = x2 - y2 - z2
    return diff.sign() >= 0 and diff * diff == 4 * (y2 * z2)
