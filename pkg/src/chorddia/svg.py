"""Standalone SVG rendering of a chord diagram.

One circle, one straight line segment per chord, one square marker and one
1-based label per point. Points sit at angles 360*(v-1)/(2n) degrees from
the positive x-axis, counterclockwise. Output is plain text and identical
for identical input.
"""

from __future__ import annotations

import math

from .diagrams import ChordDiagram

_SIZE = 320.0
_CENTER = 160.0
_RADIUS = 120.0
_LABEL_RADIUS = 142.0
_MARKER = 6.0


def _point(v: int, count: int, radius: float) -> tuple[float, float]:
    angle = 2.0 * math.pi * v / count
    # screen y grows downward; negate sin so the points run counterclockwise
    return (_CENTER + radius * math.cos(angle), _CENTER - radius * math.sin(angle))


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def render_svg(diagram: ChordDiagram) -> str:
    count = diagram.size
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(_SIZE)}" height="{_fmt(_SIZE)}" '
        f'viewBox="0 0 {_fmt(_SIZE)} {_fmt(_SIZE)}">',
        f'  <circle cx="{_fmt(_CENTER)}" cy="{_fmt(_CENTER)}" r="{_fmt(_RADIUS)}" '
        f'fill="none" stroke="black" stroke-width="1.5"/>',
    ]
    for a, b in diagram.chords():
        xa, ya = _point(a, count, _RADIUS)
        xb, yb = _point(b, count, _RADIUS)
        lines.append(
            f'  <line class="chord" x1="{_fmt(xa)}" y1="{_fmt(ya)}" '
            f'x2="{_fmt(xb)}" y2="{_fmt(yb)}" stroke="black" stroke-width="1.5"/>'
        )
    for v in range(count):
        x, y = _point(v, count, _RADIUS)
        lines.append(
            f'  <rect class="point" x="{_fmt(x - _MARKER / 2)}" '
            f'y="{_fmt(y - _MARKER / 2)}" width="{_fmt(_MARKER)}" '
            f'height="{_fmt(_MARKER)}" fill="black"/>'
        )
    for v in range(count):
        x, y = _point(v, count, _LABEL_RADIUS)
        lines.append(
            f'  <text class="label" x="{_fmt(x)}" y="{_fmt(y + 4.0)}" '
            f'font-family="sans-serif" font-size="12" '
            f'text-anchor="middle">{v + 1}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
