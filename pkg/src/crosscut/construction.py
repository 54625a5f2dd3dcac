"""The crosscut construction.

Each side of a convex quadrilateral ABCD gets a division point (A1 on AB,
B1 on BC, C1 on CD, D1 on DA) at fraction t = k/(k+1) along the side.  The
four lines AB1, BC1, CD1, DA1 cut out an inner quadrilateral KLMN with the
fixed pairing

    K = AB1 x DA1,  L = AB1 x BC1,  M = BC1 x CD1,  N = CD1 x DA1.

For k > 0 this is the classical segment-ratio setup |AA1|/|A1B| = k and
KLMN sits inside ABCD; the vector form extends the construction to all
k > -1 (KLMN coincides with ABCD at k = 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import DomainError, ParallelLines, ZeroArea, ZeroDenominator
from .exact_geometry import (
    CanonicalParams,
    Line,
    Point,
    Quadrilateral,
    canonical_quadrilateral,
    intersect_lines,
    line_through,
    orientation,
    signed_area,
    to_rational,
)


@dataclass(frozen=True)
class KParam:
    """The ratio parameter k, restricted to k > -1."""

    k: Fraction

    def __post_init__(self):
        if self.k <= -1:
            raise DomainError(f"k must exceed -1, got {self.k}")

    @staticmethod
    def from_segment_ratio(k) -> "KParam":
        """Original setup: division in segment ratio k : 1, requires k > 0."""
        k = to_rational(k)
        if k <= 0:
            raise DomainError(f"segment-ratio form requires k > 0, got {k}")
        return KParam(k)

    @staticmethod
    def from_any(k) -> "KParam":
        """Vector form, valid for any k in (-1, inf)."""
        return KParam(to_rational(k))

    @property
    def fraction(self) -> Fraction:
        """The side fraction t = k/(k+1) used by the vector form."""
        return self.k / (self.k + 1)


@dataclass(frozen=True)
class CrosscutFigure:
    quad: Quadrilateral
    k: KParam
    division_points: Tuple[Point, Point, Point, Point]  # A1, B1, C1, D1
    lines: Tuple[Line, Line, Line, Line]  # AB1, BC1, CD1, DA1
    inner: Tuple[Point, Point, Point, Point]  # K, L, M, N
    outer_area: Fraction  # S
    inner_area: Fraction  # s
    ratio: Fraction  # s / S
    inner_inside: bool  # all of K, L, M, N weakly inside ABCD
    inner_simple: bool  # KLMN is a simple (non-self-intersecting) polygon


def division_points(quad: Quadrilateral, k: KParam):
    """Division points A1, B1, C1, D1 via X1 = X + k/(k+1) * (next - X)."""
    t = k.fraction
    verts = quad.vertices()
    return tuple(
        verts[i] + (verts[(i + 1) % 4] - verts[i]).scaled(t) for i in range(4)
    )


def cevian_lines(quad: Quadrilateral, k: KParam):
    """Lines AB1, BC1, CD1, DA1 joining each vertex to the division point
    on the second side counted from it."""
    a, b, c, d = quad.vertices()
    a1, b1, c1, d1 = division_points(quad, k)
    return (
        line_through(a, b1),
        line_through(b, c1),
        line_through(c, d1),
        line_through(d, a1),
    )


_PAIRING = (("K", 0, 3), ("L", 0, 1), ("M", 1, 2), ("N", 2, 3))


def inner_vertices(lines) -> Tuple[Point, Point, Point, Point]:
    """Intersect the cevian lines with the fixed K, L, M, N pairing."""
    pts = []
    for name, i, j in _PAIRING:
        try:
            pts.append(intersect_lines(lines[i], lines[j]))
        except ParallelLines as exc:
            raise ParallelLines(
                f"inner vertex {name}: {exc}", lines=exc.lines, vertex=name
            ) from exc
    return tuple(pts)


def _point_weakly_inside(pt: Point, quad: Quadrilateral, sense: int) -> bool:
    verts = quad.vertices()
    for i in range(4):
        o = orientation(verts[i], verts[(i + 1) % 4], pt)
        if o != 0 and o != sense:
            return False
    return True


def _segments_cross(p1: Point, p2: Point, p3: Point, p4: Point) -> bool:
    """Proper crossing test for the two diagonally opposite edge pairs."""
    d1 = orientation(p3, p4, p1)
    d2 = orientation(p3, p4, p2)
    d3 = orientation(p1, p2, p3)
    d4 = orientation(p1, p2, p4)
    return d1 * d2 < 0 and d3 * d4 < 0


def crosscut_figure(quad: Quadrilateral, k: KParam) -> CrosscutFigure:
    """Construct the full figure and its exact area ratio s/S.

    The construction is affine-equivariant, so s/S computed in the input
    frame equals the canonical-frame value.
    """
    outer = signed_area(quad.vertices())
    if outer == 0:
        raise ZeroArea("quadrilateral has zero area")
    sense = 1 if outer > 0 else -1
    outer = abs(outer)

    div = division_points(quad, k)
    lines = cevian_lines(quad, k)
    inner = inner_vertices(lines)
    inner_area = abs(signed_area(inner))

    kpt, lpt, mpt, npt = inner
    inside = all(_point_weakly_inside(pt, quad, sense) for pt in inner)
    simple = not (
        _segments_cross(kpt, lpt, mpt, npt) or _segments_cross(lpt, mpt, npt, kpt)
    )
    return CrosscutFigure(
        quad=quad,
        k=k,
        division_points=div,
        lines=lines,
        inner=inner,
        outer_area=outer,
        inner_area=inner_area,
        ratio=inner_area / outer,
        inner_inside=inside,
        inner_simple=simple,
    )


def crosscut_ratio_canonical(params: CanonicalParams, k: KParam) -> Fraction:
    """Area ratio for the canonical-frame quadrilateral at (a, b)."""
    return crosscut_figure(canonical_quadrilateral(params), k).ratio


# Closed-form inner vertices in the canonical frame: each row is
# (numerator_x, numerator_y, shared denominator) as coefficient functions
# of (a, b, k).  Kept as an independent cross-check of the line-intersection
# path, not the primary path.


def _closed_form_rows(a: Fraction, b: Fraction, k: Fraction):
    return (
        (
            "K",
            a * k**2,
            k * (b * k + 1),
            a * k**2 + b * k**2 + b * k + k + 1,
        ),
        (
            "L",
            a * k * (a + k),
            (b * k + 1) * (a + k),
            a * k**2 + b * k**2 + a * k + k + a,
        ),
        (
            "M",
            a * k**2 + a**2 * k + a * k + b * k - k + a**2 + a * b - a,
            b * (k**2 + a * k + a + b - 1),
            a * k**2 + b * k**2 + 2 * a * k + b * k - k + a + b - 1,
        ),
        (
            "N",
            a * k**2 + a * k + b * k - k + b,
            b * k**2,
            a * k**2 + b * k**2 + a * k + 2 * b * k - k + b,
        ),
    )


def closed_form_inner_vertices(params: CanonicalParams, k: KParam):
    """K, L, M, N from the closed-form coordinates in the canonical frame."""
    pts = []
    for name, nx, ny, den in _closed_form_rows(params.a, params.b, k.k):
        if den == 0:
            raise ZeroDenominator(
                f"closed-form denominator for {name} vanishes at "
                f"(a, b, k) = ({params.a}, {params.b}, {k.k})",
                which=name,
            )
        pts.append(Point(nx / den, ny / den))
    return tuple(pts)


def theorem_bounds(k: KParam) -> Tuple[Fraction, Fraction]:
    """Sharp lower/upper bounds for s/S at ratio parameter k > 0."""
    kk = k.k
    if kk <= 0:
        raise DomainError(f"bounds are stated for k > 0 only, got {kk}")
    lower = Fraction(1) / ((kk + 1) * (kk**2 + kk + 1))
    upper = Fraction(1) / (2 * kk**2 + 2 * kk + 1)
    return lower, upper


def triangle_area_decomposition(params: CanonicalParams, k: KParam) -> Fraction:
    """Inner area via the triangle decomposition s = S_ANM + S_AML - S_ANK
    in the canonical frame (A at the origin)."""
    kpt, lpt, mpt, npt = inner_vertices(
        cevian_lines(canonical_quadrilateral(params), k)
    )

    def double_area(p: Point, q: Point) -> Fraction:
        return p.cross(q)

    double_s = (
        double_area(npt, mpt) + double_area(mpt, lpt) - double_area(npt, kpt)
    )
    return double_s / 2
