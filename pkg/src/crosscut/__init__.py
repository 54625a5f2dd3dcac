"""Exact-arithmetic crosscut quadrilateral constructions and sharp
area-ratio bound verification."""

from .construction import (
    CrosscutFigure,
    KParam,
    cevian_lines,
    closed_form_inner_vertices,
    crosscut_figure,
    crosscut_ratio_canonical,
    division_points,
    inner_vertices,
    theorem_bounds,
)
from .exact_geometry import (
    AffineMap,
    CanonicalParams,
    Line,
    Point,
    Quadrilateral,
    Rational,
    canonical_quadrilateral,
    canonicalize,
    intersect_lines,
    is_weakly_convex,
    line_through,
    orientation,
    point,
    quadrilateral,
    signed_area,
)
from .polynomials import (
    MPoly,
    RationalFn,
    build_P,
    build_Q,
    check_lower_identity,
    check_ratio_identity,
    check_rewrites,
    check_upper_identity,
    derive_ratio_symbolic,
)
from .verifier import (
    BoundsReport,
    ExplorationReport,
    SampleSpec,
    empirical_extrema,
    equality_locus_check,
    sample_omega,
    scan_k,
    verify_bounds,
)

__version__ = "0.1.0"

__all__ = [
    "AffineMap",
    "BoundsReport",
    "CanonicalParams",
    "CrosscutFigure",
    "ExplorationReport",
    "KParam",
    "Line",
    "MPoly",
    "Point",
    "Quadrilateral",
    "Rational",
    "RationalFn",
    "SampleSpec",
    "build_P",
    "build_Q",
    "canonical_quadrilateral",
    "canonicalize",
    "cevian_lines",
    "check_lower_identity",
    "check_ratio_identity",
    "check_rewrites",
    "check_upper_identity",
    "closed_form_inner_vertices",
    "crosscut_figure",
    "crosscut_ratio_canonical",
    "derive_ratio_symbolic",
    "division_points",
    "empirical_extrema",
    "equality_locus_check",
    "inner_vertices",
    "intersect_lines",
    "is_weakly_convex",
    "line_through",
    "orientation",
    "point",
    "quadrilateral",
    "sample_omega",
    "scan_k",
    "signed_area",
    "theorem_bounds",
    "verify_bounds",
]
