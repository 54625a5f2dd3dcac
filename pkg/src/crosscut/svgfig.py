"""Deterministic SVG rendering of a crosscut figure.

Coordinates are formatted with a fixed 6-decimal precision; rendering never
feeds back into any exact computation.
"""

from __future__ import annotations

from typing import List

from .construction import CrosscutFigure
from .exact_geometry import Point

_VIEW = 600.0
_MARGIN = 0.06


def _fmt(value: float) -> str:
    return f"{value:.6f}"


class _Viewport:
    def __init__(self, points: List[Point]):
        xs = [float(p.x) for p in points]
        ys = [float(p.y) for p in points]
        min_x, max_x = min(xs), max(xs)
        min_y, max_y = min(ys), max(ys)
        span = max(max_x - min_x, max_y - min_y) or 1.0
        pad = span * _MARGIN
        self.scale = _VIEW / (span + 2 * pad)
        self.min_x = min_x - pad
        self.max_y = max_y + pad

    def to_svg(self, p: Point) -> tuple:
        # flip y so the figure reads in the usual mathematical orientation
        return (
            (float(p.x) - self.min_x) * self.scale,
            (self.max_y - float(p.y)) * self.scale,
        )


def _polygon(view: _Viewport, pts, style: str) -> str:
    coords = " ".join(
        f"{_fmt(x)},{_fmt(y)}" for x, y in (view.to_svg(p) for p in pts)
    )
    return f'<polygon points="{coords}" style="{style}" />'


def _segment(view: _Viewport, p: Point, q: Point, style: str) -> str:
    x1, y1 = view.to_svg(p)
    x2, y2 = view.to_svg(q)
    return (
        f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" '
        f'y2="{_fmt(y2)}" style="{style}" />'
    )


def _label(view: _Viewport, p: Point, text: str) -> str:
    x, y = view.to_svg(p)
    return (
        f'<text x="{_fmt(x + 6)}" y="{_fmt(y - 6)}" '
        f'font-size="14" font-family="sans-serif">{text}</text>'
    )


def render_svg(figure: CrosscutFigure) -> str:
    """SVG document showing ABCD, the four cevian lines, and KLMN."""
    outer = figure.quad.vertices()
    inner = figure.inner
    div = figure.division_points
    view = _Viewport(list(outer) + list(inner) + list(div))

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{int(_VIEW)}" '
        f'height="{int(_VIEW)}" viewBox="0 0 {int(_VIEW)} {int(_VIEW)}">',
        _polygon(view, outer, "fill:none;stroke:#202020;stroke-width:2"),
    ]
    # cevian segments: each vertex joined to its target division point,
    # extended through the inner quadrilateral by construction
    targets = (div[1], div[2], div[3], div[0])
    for vertex, target in zip(outer, targets):
        parts.append(
            _segment(view, vertex, target, "stroke:#5577cc;stroke-width:1.2")
        )
    parts.append(
        _polygon(
            view, inner, "fill:#cc333340;stroke:#cc3333;stroke-width:1.6"
        )
    )
    for pt, name in zip(outer, "ABCD"):
        parts.append(_label(view, pt, name))
    for pt, name in zip(inner, "KLMN"):
        parts.append(_label(view, pt, name))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
