"""Exact Q(√3) arithmetic, the two figures, Ptolemy, and SVG output."""

import csv
import itertools
from collections import Counter
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from eisen import NotConcyclic, NotRepresentable
from eisen.geometry import (
    Embedding,
    Point,
    QSqrt3,
    Rotation,
    apply_rotation,
    build_k222,
    build_k333,
    circular_order,
    dist_sq,
    emit_svg,
    integer_distance,
    pair_key,
    ptolemy_check,
    rotation_from_chord,
)

GOLDEN = Path(__file__).parent / "golden"


def load_golden(name):
    with open(GOLDEN / name, newline="") as fh:
        rows = list(csv.reader(fh))
    labels = rows[0][1:]
    matrix = {}
    for row in rows[1:]:
        for other, value in zip(labels, row[1:]):
            if other != row[0]:
                matrix[pair_key(row[0], other)] = int(value)
    return labels, matrix


# --- QSqrt3 ---


def test_qsqrt3_product_formula():
    u = QSqrt3.of(Fraction(1, 2), 2)
    v = QSqrt3.of(3, Fraction(-1, 3))
    # (r1 r2 + 3 s1 s2) + (r1 s2 + s1 r2) √3
    assert u * v == QSqrt3.of(Fraction(1, 2) * 3 + 3 * 2 * Fraction(-1, 3),
                              Fraction(1, 2) * Fraction(-1, 3) + 2 * 3)


@pytest.mark.parametrize(
    "r, s, sign",
    [
        (0, 0, 0),
        (5, 0, 1),
        (-5, 0, -1),
        (0, 1, 1),
        (0, -1, -1),
        (2, -1, 1),   # 2 > √3
        (1, -1, -1),  # 1 < √3
        (-2, 1, -1),
        (-1, 1, 1),
        (-7, 4, -1),  # 7 > 4√3 = 6.93
        (-17, 10, 1),  # 17 < 10√3 = 17.32
    ],
)
def test_qsqrt3_sign(r, s, sign):
    assert QSqrt3.of(r, s).sign() == sign


def test_qsqrt3_equality_is_componentwise():
    assert QSqrt3.of(1, 2) != QSqrt3.of(1, 3)
    assert QSqrt3.of(Fraction(2, 4), 0) == QSqrt3.of(Fraction(1, 2), 0)


# --- rotations ---


def test_rotation_from_chord_equilateral():
    rot = rotation_from_chord(7, Fraction(49, 3))
    assert (rot.c, rot.s) == (Fraction(-1, 2), Fraction(1, 2))


def test_rotation_from_chord_three():
    rot = rotation_from_chord(3, Fraction(49, 3))
    assert (rot.c, rot.s) == (Fraction(71, 98), Fraction(39, 98))
    assert rot.c**2 + 3 * rot.s**2 == 1


def test_rotation_from_chord_sixteen():
    rot = rotation_from_chord(16, Fraction(2401, 3))
    assert rot.c == Fraction(2017, 2401)
    assert rot.s == Fraction(752, 2401)


def test_rotation_from_chord_not_representable():
    with pytest.raises(NotRepresentable):
        rotation_from_chord(1, Fraction(49, 3))


def test_rotation_from_chord_rejects_oversized_chord():
    with pytest.raises(ValueError):
        rotation_from_chord(9, Fraction(49, 3))


def test_rotation_unit_circle_enforced():
    with pytest.raises(ValueError):
        Rotation(Fraction(1, 2), Fraction(1, 3))


def test_identity_rotation_fixes_points():
    p = Point(QSqrt3.of(3, Fraction(1, 5)), QSqrt3.of(-2, 7))
    assert apply_rotation(Rotation.identity(), p) == p


def test_rotation_by_120_has_order_three():
    rot = rotation_from_chord(7, Fraction(49, 3))
    p = Point(QSqrt3.of(0), QSqrt3.of(0, Fraction(7, 3)))
    q = p
    for _ in range(3):
        q = apply_rotation(rot, q)
    assert q == p


def test_rotated_top_is_distance_seven_away():
    rot = rotation_from_chord(7, Fraction(49, 3))
    p = Point(QSqrt3.of(0), QSqrt3.of(0, Fraction(7, 3)))
    q = apply_rotation(rot, p)
    assert dist_sq(p, q) == QSqrt3.of(49)


# random rotations via the rational parametrization of c² + 3s² = 1:
# c = (1 - 3t²)/(1 + 3t²), s = 2t/(1 + 3t²)
rationals = st.fractions(min_value=-100, max_value=100, max_denominator=997)


def rotation_from_parameter(t):
    den = 1 + 3 * t * t
    return Rotation((1 - 3 * t * t) / den, 2 * t / den)


@given(rationals, rationals, rationals, rationals, rationals)
def test_rotation_preserves_norm(t, xr, xs, yr, ys):
    rot = rotation_from_parameter(t)
    p = Point(QSqrt3.of(xr, xs), QSqrt3.of(yr, ys))
    assert apply_rotation(rot, p).norm_sq() == p.norm_sq()


def test_dist_sq_zero_on_equal_points():
    p = Point(QSqrt3.of(1, 2), QSqrt3.of(3, 4))
    assert dist_sq(p, p) == QSqrt3.of(0)


# --- figure 1 ---


@pytest.fixture(scope="module")
def k222():
    return build_k222()


@pytest.fixture(scope="module")
def k333():
    return build_k333()


def test_k222_on_circle(k222):
    assert k222.radius_sq == Fraction(49, 3)
    assert k222.off_circle() == []


def test_k222_expected_distances(k222):
    assert k222.expected_failures() == []


def test_k222_matrix_matches_golden(k222):
    labels, golden = load_golden("k222_distances.csv")
    assert k222.labels() == labels
    assert k222.distance_matrix() == golden


def test_k222_distance_multiset(k222):
    counts = Counter(k222.distance_matrix().values())
    assert counts == {3: 3, 5: 3, 7: 6, 8: 3}


def test_k222_ptolemy_derived_chord(k222):
    assert integer_distance(k222.points["B2"], k222.points["A1"]) == 8


def test_k222_circular_order(k222):
    labels = k222.labels()
    order = [labels[i] for i in circular_order([k222.points[l] for l in labels])]
    assert order == ["B3", "A1", "B1", "A2", "B2", "A3"]


def test_k222_ptolemy_all_quadruples(k222):
    labels = k222.labels()
    order = [labels[i] for i in circular_order([k222.points[l] for l in labels])]
    for quad in itertools.combinations(order, 4):
        assert ptolemy_check(*(k222.points[l] for l in quad))


def test_k222_ptolemy_named_instance(k222):
    assert 7 * 7 == 3 * 3 + 8 * 5
    assert ptolemy_check(*(k222.points[l] for l in ["A1", "B1", "A2", "B2"]))


# --- figure 2 ---


def test_k333_on_circle(k333):
    assert k333.radius_sq == Fraction(2401, 3)
    assert k333.off_circle() == []


def test_k333_matrix_matches_golden(k333):
    labels, golden = load_golden("k333_distances.csv")
    assert k333.labels() == labels
    assert k333.distance_matrix() == golden


def test_k333_distance_multiset(k333):
    counts = Counter(k333.distance_matrix().values())
    assert counts == {16: 3, 21: 6, 35: 6, 39: 3, 49: 9, 55: 3, 56: 6}


def test_k333_distance_families(k333):
    matrix = k333.distance_matrix()

    def d(a, b):
        return matrix[pair_key(a, b)]

    assert d("A1", "C3") == d("A3", "C2") == d("A2", "C1") == 16
    assert d("C3", "A3") == d("A2", "C2") == d("A1", "C1") == 39
    assert d("B3", "C3") == d("B2", "C2") == d("B1", "C1") == 21
    assert d("A1", "B2") == d("A2", "B3") == d("A3", "B1") == 56
    assert d("B2", "C1") == d("B1", "C3") == d("B3", "C2") == 35
    # the 55-long chords connect A to C; the corresponding B-C chords are 56
    assert d("A1", "C2") == d("A2", "C3") == d("A3", "C1") == 55
    assert d("B1", "C2") == d("B2", "C3") == d("C1", "B3") == 56


def test_k333_law_of_cosines_bridges(k333):
    matrix = k333.distance_matrix()

    def d(a, b):
        return matrix[pair_key(a, b)]

    assert d("A1", "C3") ** 2 + d("A1", "C3") * d("C3", "A3") + d("C3", "A3") ** 2 == d("A1", "A3") ** 2
    assert 16**2 + 16 * 39 + 39**2 == 2401


def test_k222_law_of_cosines_bridge(k222):
    matrix = k222.distance_matrix()

    def d(a, b):
        return matrix[pair_key(a, b)]

    assert d("A1", "B1") ** 2 + d("A1", "B1") * d("B1", "A2") + d("B1", "A2") ** 2 == d("A1", "A2") ** 2


def test_k333_circular_order_alternates(k333):
    labels = k333.labels()
    order = [labels[i] for i in circular_order([k333.points[l] for l in labels])]
    assert order == ["B3", "C3", "A1", "B1", "C1", "A2", "B2", "C2", "A3"]
    letters = [name[0] for name in order]
    assert letters == ["B", "C", "A"] * 3


def test_k333_ptolemy_all_quadruples(k333):
    labels = k333.labels()
    order = [labels[i] for i in circular_order([k333.points[l] for l in labels])]
    for quad in itertools.combinations(order, 4):
        assert ptolemy_check(*(k333.points[l] for l in quad))


def test_k333_ptolemy_named_instance(k333):
    assert 39 * 35 == 21 * 16 + 21 * 49
    assert ptolemy_check(*(k333.points[l] for l in ["A3", "B3", "C3", "A1"]))


def test_k333_scales_k222(k222, k333):
    for name, p in k222.points.items():
        assert k333.points[name] == p.scaled(7)


# --- ptolemy / circular order edge cases ---


def test_ptolemy_repeated_point_rejected(k222):
    a, b, c = (k222.points[l] for l in ["A1", "B1", "A2"])
    with pytest.raises(NotConcyclic):
        ptolemy_check(a, a, b, c)


def test_ptolemy_requires_common_circle(k222):
    a, b, c = (k222.points[l] for l in ["A1", "B1", "A2"])
    off = Point(QSqrt3.of(1), QSqrt3.of(0))
    with pytest.raises(NotConcyclic):
        ptolemy_check(a, b, c, off)


def test_ptolemy_irrational_distances():
    # square at 45° on radius √2: chords are not all integers but the
    # identity still holds and must be decided exactly
    pts = [
        Point(QSqrt3.of(1), QSqrt3.of(1)),
        Point(QSqrt3.of(-1), QSqrt3.of(1)),
        Point(QSqrt3.of(-1), QSqrt3.of(-1)),
        Point(QSqrt3.of(1), QSqrt3.of(-1)),
    ]
    assert ptolemy_check(*pts)


def test_circular_order_single_point():
    assert circular_order([Point(QSqrt3.of(1), QSqrt3.of(0))]) == [0]


def test_circular_order_rejects_mixed_radii(k222):
    pts = [k222.points["A1"], Point(QSqrt3.of(1), QSqrt3.of(0))]
    with pytest.raises(NotConcyclic):
        circular_order(pts)


# --- svg ---


def test_svg_structure(k222):
    doc = emit_svg(k222)
    assert doc.count("<line") == 15
    assert doc.count("<circle") == 7  # main circle + 6 points
    for label in k222.labels():
        assert f">{label}</text>" in doc


def test_svg_deterministic(k222):
    assert emit_svg(k222) == emit_svg(k222)


def test_svg_empty_embedding():
    doc = emit_svg(Embedding(Fraction(49, 3), {}, {}))
    assert doc.count("<circle") == 1
    assert "<line" not in doc


def test_svg_k333_labels(k333):
    doc = emit_svg(k333)
    assert doc.count("<line") == 36
    assert all(f">{label}</text>" in doc for label in k333.labels())


def test_svg_rejects_bad_scale(k222):
    with pytest.raises(ValueError):
        emit_svg(k222, scale=0)
