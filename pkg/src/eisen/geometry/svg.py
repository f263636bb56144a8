"""SVG rendering of circle embeddings.

All geometry stays exact until the final coordinate formatting; output is
deterministic for a fixed embedding and scale (fixed-precision floats,
label-sorted element order, no timestamps).
"""

from __future__ import annotations

import math

from .embeddings import Embedding, integer_distance

_POINT_RADIUS = 3.0
_MARGIN = 30.0


def _fmt(v: float) -> str:
    return f"{v:.4f}"


def emit_svg(embedding: Embedding, scale: float = 40.0) -> str:
    """Render the embedding: circle, labeled points, and one chord with a
    distance label per expected pair."""
    if scale <= 0:
        raise ValueError(f"scale must be positive, got {scale}")
    radius = math.sqrt(float(embedding.radius_sq)) * scale
    half = radius + _MARGIN
    size = 2 * half

    def to_svg(p) -> tuple[float, float]:
        return half + float(p.x) * scale, half - float(p.y) * scale

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(size)}" height="{_fmt(size)}" '
        f'viewBox="0 0 {_fmt(size)} {_fmt(size)}">',
        f'<rect width="{_fmt(size)}" height="{_fmt(size)}" fill="white"/>',
        f'<circle cx="{_fmt(half)}" cy="{_fmt(half)}" r="{_fmt(radius)}" '
        'fill="none" stroke="black" stroke-width="1"/>',
    ]

    for (a, b) in sorted(embedding.expected):
        pa, pb = embedding.points[a], embedding.points[b]
        xa, ya = to_svg(pa)
        xb, yb = to_svg(pb)
        lines.append(
            f'<line x1="{_fmt(xa)}" y1="{_fmt(ya)}" x2="{_fmt(xb)}" y2="{_fmt(yb)}" '
            'stroke="#3366aa" stroke-width="0.8"/>'
        )
        d = integer_distance(pa, pb)
        mx, my = (xa + xb) / 2, (ya + yb) / 2
        lines.append(
            f'<text x="{_fmt(mx)}" y="{_fmt(my)}" font-size="10" fill="#aa3333" '
            f'text-anchor="middle">{d}</text>'
        )

    for name in embedding.labels():
        x, y = to_svg(embedding.points[name])
        lines.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(_POINT_RADIUS)}" fill="black"/>')
        # push the label outward along the radius so it clears the chord ends
        dx, dy = x - half, y - half
        norm = math.hypot(dx, dy) or 1.0
        lx, ly = x + 14 * dx / norm, y + 14 * dy / norm
        lines.append(
            f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="12" font-weight="bold" '
            f'text-anchor="middle" dominant-baseline="middle">{name}</text>'
        )

    lines.append("</svg>")
    return "\n".join(lines) + "\n"
