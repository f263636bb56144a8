"""Exact Q(√3) geometry: integer-distance circle embeddings and their checks."""

from .exact import (
    Point,
    QSqrt3,
    Rotation,
    apply_rotation,
    dist_sq,
    rational_sqrt,
    rotation_from_chord,
)
from .embeddings import (
    Embedding,
    K222_EXPECTED,
    K333_EXPECTED,
    build_k222,
    build_k333,
    circular_order,
    integer_distance,
    pair_key,
    ptolemy_check,
)
from .svg import emit_svg

__all__ = [
    "Point",
    "QSqrt3",
    "Rotation",
    "apply_rotation",
    "dist_sq",
    "rational_sqrt",
    "rotation_from_chord",
    "Embedding",
    "K222_EXPECTED",
    "K333_EXPECTED",
    "build_k222",
    "build_k333",
    "circular_order",
    "integer_distance",
    "pair_key",
    "ptolemy_check",
    "emit_svg",
]
