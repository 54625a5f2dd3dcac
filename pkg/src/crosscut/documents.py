"""Exact JSON/CSV serialization.

Every rational value is serialized as a "p/q" string; floating point never
appears in a document.  Decimal input strings convert by exact base-10
scaling ("0.3" -> 3/10); JSON float literals convert to their exact binary
value.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Tuple

from .construction import CrosscutFigure, theorem_bounds
from .errors import InputError
from .exact_geometry import (
    Canonicalization,
    Line,
    Point,
    Quadrilateral,
    quadrilateral,
)


def parse_rational(value) -> Fraction:
    """Parse an int, float, "p/q" string, integer string, or decimal string."""
    if isinstance(value, bool):
        raise InputError(f"not a number: {value!r}")
    if isinstance(value, (int, float, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)  # handles "p/q", "-3", "0.25" exactly
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse rational from {value!r}: {exc}")
    raise InputError(f"cannot parse rational from {value!r}")


def format_rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _point_doc(p: Point):
    return [format_rational(p.x), format_rational(p.y)]


def load_quad_document(doc) -> Quadrilateral:
    """Build a Quadrilateral from a parsed QuadDocument.

    Accepts either a top-level "vertices" list or a FigureDocument whose
    "input" echoes one, so construct output can be fed back in.
    """
    if isinstance(doc, dict) and "vertices" not in doc and "input" in doc:
        doc = doc["input"]
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise InputError('document must contain a "vertices" list')
    vertices = doc["vertices"]
    if not isinstance(vertices, list) or len(vertices) != 4:
        raise InputError("exactly four vertices are required")
    coords = []
    for entry in vertices:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise InputError(f"vertex must be an [x, y] pair, got {entry!r}")
        coords.append((parse_rational(entry[0]), parse_rational(entry[1])))
    try:
        return quadrilateral(coords)
    except ValueError as exc:
        raise InputError(f"invalid quadrilateral: {exc}")


def load_quad_file(path: str) -> Quadrilateral:
    try:
        with open(path) as handle:
            doc = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read quadrilateral document {path}: {exc}")
    return load_quad_document(doc)


def _line_doc(line: Line):
    return {"p": line.p, "q": line.q, "r": line.r}


def figure_document(
    figure: CrosscutFigure, canonical: Canonicalization
) -> dict:
    """Lossless FigureDocument for a constructed crosscut figure."""
    quad = figure.quad
    k = figure.k
    doc = {
        "input": {
            "vertices": [_point_doc(p) for p in quad.vertices()],
        },
        "k": format_rational(k.k),
        "canonical": {
            "a": format_rational(canonical.params.a),
            "b": format_rational(canonical.params.b),
            "relabel_rotation": canonical.rotation,
        },
        "division_points": {
            name: _point_doc(p)
            for name, p in zip(("A1", "B1", "C1", "D1"), figure.division_points)
        },
        "lines": {
            name: _line_doc(line)
            for name, line in zip(("AB1", "BC1", "CD1", "DA1"), figure.lines)
        },
        "inner": {
            name: _point_doc(p) for name, p in zip("KLMN", figure.inner)
        },
        "S": format_rational(figure.outer_area),
        "s": format_rational(figure.inner_area),
        "ratio": format_rational(figure.ratio),
        "inner_inside": figure.inner_inside,
        "inner_simple": figure.inner_simple,
    }
    if k.k > 0:
        lower, upper = theorem_bounds(k)
        doc["bounds"] = {
            "lower": format_rational(lower),
            "upper": format_rational(upper),
        }
        doc["equality"] = {
            "lower": figure.ratio == lower,
            "upper": figure.ratio == upper,
        }
    return doc


def bounds_report_document(report) -> dict:
    return {
        "k": format_rational(report.k),
        "bounds": {
            "lower": format_rational(report.lower),
            "upper": format_rational(report.upper),
        },
        "samples_checked": report.samples_checked,
        "violations": [
            {"a": format_rational(a), "b": format_rational(b),
             "ratio": format_rational(r)}
            for a, b, r in report.violations
        ],
        "min_ratio": format_rational(report.min_ratio),
        "min_points": [
            [format_rational(a), format_rational(b)] for a, b in report.min_points
        ],
        "max_ratio": format_rational(report.max_ratio),
        "max_points": [
            [format_rational(a), format_rational(b)] for a, b in report.max_points
        ],
        "equality_hits": [
            {"a": format_rational(a), "b": format_rational(b), "bound": which}
            for a, b, which in report.equality_hits
        ],
        "ok": report.ok,
    }


def exploration_report_document(report) -> dict:
    def opt(value, fmt=format_rational):
        return None if value is None else fmt(value)

    return {
        "label": report.label,
        "k": format_rational(report.k),
        "min_ratio": opt(report.min_ratio),
        "min_points": [
            [format_rational(a), format_rational(b)] for a, b in report.min_points
        ],
        "max_ratio": opt(report.max_ratio),
        "max_points": [
            [format_rational(a), format_rational(b)] for a, b in report.max_points
        ],
        "records": [
            {
                "a": format_rational(rec.a),
                "b": format_rational(rec.b),
                "ratio": opt(rec.ratio),
                "simple": rec.simple,
                "inner_inside": rec.inner_inside,
                "parallel_failure": rec.parallel_failure,
                "pq_value": opt(rec.pq_value),
                "pq_agrees": rec.pq_agrees,
            }
            for rec in report.records
        ],
    }


SCAN_CSV_COLUMNS = (
    "k", "lower", "upper", "empirical_min", "empirical_max",
    "samples", "equality_hits",
)


def scan_row_csv(row) -> Tuple[str, ...]:
    def opt(value):
        return "" if value is None else format_rational(value)

    return (
        format_rational(row.k),
        opt(row.lower),
        opt(row.upper),
        opt(row.empirical_min),
        opt(row.empirical_max),
        str(row.samples),
        str(row.equality_hits),
    )
