"""Exact rational planar primitives.

Points, lines, orientation, shoelace areas, weak-convexity tests, and the
affine normalization that sends a quadrilateral ABCD to the canonical frame
A=(0,0), B=(0,1), D=(1,0) with C landing at (a,b) in the parameter wedge

    Omega = {(a, b) : a >= 0, b >= 0, a + b >= 1}.

Every coordinate is a ``fractions.Fraction``; there is no rounding anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Tuple

from .errors import CoincidentPoints, DegenerateFrame, ParallelLines

# The single scalar type of the whole system.  Fraction already maintains
# gcd-reduced form with a positive denominator, which is exactly the
# canonical representation we need.
Rational = Fraction


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and floats to an exact Fraction.

    Floats convert to their exact binary (dyadic) value, never re-rounded.
    """
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def scaled(self, factor: Fraction) -> "Point":
        return Point(self.x * factor, self.y * factor)

    def cross(self, other: "Point") -> Fraction:
        return self.x * other.y - self.y * other.x


def point(x, y) -> Point:
    """Build a Point from anything Fraction accepts."""
    return Point(to_rational(x), to_rational(y))


@dataclass(frozen=True)
class Line:
    """Locus p*x + q*y + r = 0 with canonical integer coefficients.

    Canonical form: (p, q, r) are coprime integers and the first nonzero of
    (p, q) is positive, so equal lines are structurally equal.
    """

    p: int
    q: int
    r: int

    @staticmethod
    def from_coeffs(p, q, r) -> "Line":
        p, q, r = to_rational(p), to_rational(q), to_rational(r)
        if p == 0 and q == 0:
            raise ValueError("line coefficients (p, q) must not both vanish")
        scale = p.denominator * q.denominator * r.denominator
        ip, iq, ir = (int(p * scale), int(q * scale), int(r * scale))
        g = gcd(gcd(abs(ip), abs(iq)), abs(ir))
        ip, iq, ir = ip // g, iq // g, ir // g
        lead = ip if ip != 0 else iq
        if lead < 0:
            ip, iq, ir = -ip, -iq, -ir
        return Line(ip, iq, ir)

    def evaluate(self, pt: Point) -> Fraction:
        return self.p * pt.x + self.q * pt.y + self.r

    def contains(self, pt: Point) -> bool:
        return self.evaluate(pt) == 0


@dataclass(frozen=True)
class AffineMap:
    """x -> M @ x + t with rational entries."""

    m00: Fraction
    m01: Fraction
    m10: Fraction
    m11: Fraction
    tx: Fraction
    ty: Fraction

    @staticmethod
    def identity() -> "AffineMap":
        one, zero = Fraction(1), Fraction(0)
        return AffineMap(one, zero, zero, one, zero, zero)

    def determinant(self) -> Fraction:
        return self.m00 * self.m11 - self.m01 * self.m10

    def apply(self, pt: Point) -> Point:
        return Point(
            self.m00 * pt.x + self.m01 * pt.y + self.tx,
            self.m10 * pt.x + self.m11 * pt.y + self.ty,
        )

    def inverse(self) -> "AffineMap":
        det = self.determinant()
        if det == 0:
            raise ValueError("affine map is singular")
        i00, i01 = self.m11 / det, -self.m01 / det
        i10, i11 = -self.m10 / det, self.m00 / det
        return AffineMap(
            i00, i01, i10, i11,
            -(i00 * self.tx + i01 * self.ty),
            -(i10 * self.tx + i11 * self.ty),
        )


@dataclass(frozen=True)
class CanonicalParams:
    """Canonical image (a, b) of vertex C; must lie in Omega."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        if not in_omega(self.a, self.b):
            raise ValueError(f"({self.a}, {self.b}) is outside Omega")


def in_omega(a, b) -> bool:
    return a >= 0 and b >= 0 and a + b >= 1


@dataclass(frozen=True)
class Quadrilateral:
    """Ordered vertices (A, B, C, D); weak convexity and S > 0 required."""

    a: Point
    b: Point
    c: Point
    d: Point

    def vertices(self) -> Tuple[Point, Point, Point, Point]:
        return (self.a, self.b, self.c, self.d)

    def __post_init__(self):
        verts = self.vertices()
        if not is_weakly_convex(verts):
            raise ValueError("vertices are not in weakly convex position")
        if signed_area(verts) == 0:
            raise ValueError("quadrilateral has zero area")


def quadrilateral(coords: Iterable) -> Quadrilateral:
    """Build a Quadrilateral from four (x, y) coordinate pairs."""
    pts = [point(x, y) for x, y in coords]
    if len(pts) != 4:
        raise ValueError("exactly four vertices required")
    return Quadrilateral(*pts)


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q - p) x (r - p); +1 is counterclockwise."""
    cross = (q - p).cross(r - p)
    return (cross > 0) - (cross < 0)


def signed_area(polygon: Sequence[Point]) -> Fraction:
    """Shoelace sum over 2; positive for counterclockwise order."""
    if len(polygon) < 3:
        raise ValueError("a polygon needs at least three vertices")
    total = Fraction(0)
    for i, pt in enumerate(polygon):
        nxt = polygon[(i + 1) % len(polygon)]
        total += pt.cross(nxt)
    return total / 2


def is_weakly_convex(quad: Sequence[Point]) -> bool:
    """True iff consecutive-triple orientations carry no opposite nonzero
    signs.  Collinear triples and coincident vertices are allowed."""
    signs = set()
    n = len(quad)
    for i in range(n):
        signs.add(orientation(quad[i], quad[(i + 1) % n], quad[(i + 2) % n]))
    return not (1 in signs and -1 in signs)


def line_through(p: Point, q: Point) -> Line:
    if p == q:
        raise CoincidentPoints(f"cannot build a line through coincident point {p}")
    return Line.from_coeffs(p.y - q.y, q.x - p.x, p.cross(q))


def intersect_lines(l1: Line, l2: Line) -> Point:
    det = l1.p * l2.q - l2.p * l1.q
    if det == 0:
        raise ParallelLines(
            f"lines {l1} and {l2} are parallel or identical", lines=(l1, l2)
        )
    x = Fraction(l1.q * l2.r - l2.q * l1.r, det)
    y = Fraction(l1.r * l2.p - l2.r * l1.p, det)
    return Point(x, y)


def _frame_map(a: Point, b: Point, d: Point) -> AffineMap:
    """Affine map sending a -> (0,0), b -> (0,1), d -> (1,0).

    Exists iff a, b, d are pairwise distinct and not collinear.
    """
    u = b - a  # must map to (0, 1)
    v = d - a  # must map to (1, 0)
    det = u.cross(v)
    if det == 0:
        raise DegenerateFrame("frame vertices are collinear or coincident")
    # M @ u = (0,1), M @ v = (1,0)  =>  M = [[0,1],[1,0]] @ inv([u v])
    m00 = -u.y / det
    m01 = u.x / det
    m10 = v.y / det
    m11 = -v.x / det
    return AffineMap(
        m00, m01, m10, m11,
        -(m00 * a.x + m01 * a.y),
        -(m10 * a.x + m11 * a.y),
    )


@dataclass(frozen=True)
class Canonicalization:
    params: CanonicalParams
    map: AffineMap
    rotation: int  # how many cyclic steps the vertices were relabeled by


def canonicalize(quad: Quadrilateral) -> Canonicalization:
    """Normalize to the canonical frame, relabeling cyclically if needed.

    Tries all four cyclic rotations of (A, B, C, D) until A, B, D are
    pairwise distinct and non-collinear; the chosen rotation is reported so
    figures can be pulled back with ``map.inverse()``.
    """
    verts = quad.vertices()
    for shift in range(4):
        a, b, c, d = (verts[(i + shift) % 4] for i in range(4))
        try:
            amap = _frame_map(a, b, d)
        except DegenerateFrame:
            continue
        image = amap.apply(c)
        return Canonicalization(CanonicalParams(image.x, image.y), amap, shift)
    raise DegenerateFrame(
        "no cyclic relabeling yields three independent frame vertices"
    )


def canonical_quadrilateral(params: CanonicalParams) -> Quadrilateral:
    """The canonical-frame quadrilateral A(0,0), B(0,1), C(a,b), D(1,0)."""
    return Quadrilateral(
        point(0, 0), point(0, 1), Point(params.a, params.b), point(1, 0)
    )
