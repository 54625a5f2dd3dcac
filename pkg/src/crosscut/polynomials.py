"""Sparse multivariate polynomials over the rationals in (a, b, k).

A polynomial maps exponent triples (e_a, e_b, e_k) to nonzero Fraction
coefficients; the empty map is the zero polynomial.  The canonical term
order used for reporting is graded lexicographic in (a, b, k).

This module carries the data of the area-ratio analysis:

  * ``build_P`` / ``build_Q``: the numerator and factored denominator of the
    closed-form ratio s/S = P/Q over the canonical frame;
  * ``derive_ratio_symbolic``: an independent symbolic re-derivation of s/S
    from the construction itself (division points, lines, intersections,
    triangle decomposition) with (a, b, k) kept as formal variables;
  * the identity checks tying the two together and verifying both
    factorizations and all positivity rewrites by exact expansion.

Rational-function equality is decided by cross-multiplication; no
multivariate GCD is needed anywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterator, Tuple

from .errors import IdentityFailed

Exponent = Tuple[int, int, int]  # degrees of a, b, k

_VAR_INDEX = {"a": 0, "b": 1, "k": 2}


class MPoly:
    """Immutable sparse polynomial in Q[a, b, k]."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Exponent, Fraction] | None = None):
        clean = {}
        if terms:
            for expo, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff != 0:
                    clean[expo] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero() -> "MPoly":
        return MPoly()

    @staticmethod
    def constant(value) -> "MPoly":
        return MPoly({(0, 0, 0): Fraction(value)})

    @staticmethod
    def variable(name: str) -> "MPoly":
        expo = [0, 0, 0]
        expo[_VAR_INDEX[name]] = 1
        return MPoly({tuple(expo): Fraction(1)})

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "MPoly":
        if isinstance(other, MPoly):
            return other
        return MPoly.constant(other)

    def __add__(self, other) -> "MPoly":
        other = MPoly._coerce(other)
        out = dict(self.terms)
        for expo, coeff in other.terms.items():
            out[expo] = out.get(expo, Fraction(0)) + coeff
        return MPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MPoly":
        return self + (-MPoly._coerce(other))

    def __rsub__(self, other) -> "MPoly":
        return MPoly._coerce(other) - self

    def __mul__(self, other) -> "MPoly":
        other = MPoly._coerce(other)
        out: Dict[Exponent, Fraction] = {}
        for (ea1, eb1, ek1), c1 in self.terms.items():
            for (ea2, eb2, ek2), c2 in other.terms.items():
                expo = (ea1 + ea2, eb1 + eb2, ek1 + ek2)
                out[expo] = out.get(expo, Fraction(0)) + c1 * c2
        return MPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = MPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, a, b, k) -> Fraction:
        a, b, k = Fraction(a), Fraction(b), Fraction(k)
        # per-variable power tables keep repeated exponentiation cheap
        powers = []
        for base, degree in zip((a, b, k), self.max_degrees()):
            table = [Fraction(1)]
            for _ in range(degree):
                table.append(table[-1] * base)
            powers.append(table)
        total = Fraction(0)
        for (ea, eb, ek), coeff in self.terms.items():
            total += coeff * powers[0][ea] * powers[1][eb] * powers[2][ek]
        return total

    def max_degrees(self) -> Tuple[int, int, int]:
        degrees = [0, 0, 0]
        for expo in self.terms:
            for i in range(3):
                if expo[i] > degrees[i]:
                    degrees[i] = expo[i]
        return tuple(degrees)

    def coefficient(self, expo: Exponent) -> Fraction:
        return self.terms.get(expo, Fraction(0))

    def sorted_terms(self) -> Iterator[Tuple[Exponent, Fraction]]:
        """Terms in descending graded-lex order on (a, b, k)."""
        return iter(
            sorted(
                self.terms.items(),
                key=lambda item: (sum(item[0]),) + item[0],
                reverse=True,
            )
        )

    def leading_term(self) -> Tuple[Exponent, Fraction]:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading term")
        return next(self.sorted_terms())

    def __repr__(self):
        if self.is_zero():
            return "MPoly(0)"
        parts = []
        for (ea, eb, ek), coeff in self.sorted_terms():
            mono = "".join(
                f"{v}^{e}" if e > 1 else (v if e == 1 else "")
                for v, e in zip("abk", (ea, eb, ek))
            )
            parts.append(f"{coeff}{'*' if mono else ''}{mono}")
        return "MPoly(" + " + ".join(parts) + ")"


A = MPoly.variable("a")
B = MPoly.variable("b")
K = MPoly.variable("k")
ONE = MPoly.constant(1)


_MONOMIAL_RE = re.compile(r"([abk])(?:\^(\d+))?")


def parse_poly(text: str) -> MPoly:
    """Parse a sum of integer-coefficient monomials like '-2a^2k^2b + b^5k^5'."""
    terms: Dict[Exponent, Fraction] = {}
    for raw in re.findall(r"[+-]?\s*[0-9abk^\s]+?(?=\s*[+-]|\s*$)", text):
        token = "".join(raw.split())
        if not token:
            continue
        sign = -1 if token.startswith("-") else 1
        token = token.lstrip("+-")
        match = re.match(r"^(\d*)", token)
        coeff = Fraction(sign * int(match.group(1) or "1"))
        expo = [0, 0, 0]
        for var, power in _MONOMIAL_RE.findall(token[match.end():]):
            expo[_VAR_INDEX[var]] += int(power or "1")
        key = tuple(expo)
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return MPoly(terms)


# Numerator of the closed-form area ratio, transcribed term by term.  The
# transcription is trusted only because check_ratio_identity re-derives the
# ratio symbolically and matches it against this data.
_P_TERMS = """
-2a^2k^2b + 6ab^4k^3 - 4ak^2b + 12a^2k^3b^2 + 9ab^4k^5
+ 16a^2k^4b^2 + 19a^2k^4b^3 + 9a^2b^3k^2 + 8a^3k^2b^2 + 17a^3k^3b^2 + 2a^2k^6b
+ 2a^4k^6b + 8a^3k^5b - b^2a - 3b^2k^2 + a^2k + bk^2 + ak^2 - 8ab^3k^5 + 9a^4k^4b
+ 2b^3ak - 4a^2k^5b + 6a^3kb + 3b^4k^3 - 5a^2kb + 3ab^4k^2 + 14a^3k^5b^2
+ 18a^2k^5b^3 - 4a^2k^5b^2 + 6a^3k^6b^2 + 15a^2k^3b^3 + 11ab^4k^4 + ab^2k^2 - 9ak^3b^2
+ 12a^3k^4b + 4ab^3k^4 + 8a^3k^2b + a^4k^3 + 3a^4k^2 - 4a^2k^6b^2 - 3a^3k^2 + 8a^4k^3b
+ a^3k^3 - 2a^2k^3 - 5a^3k^4 + 6a^2k^6b^3 + 2b^2k^3 - a^2b - 2a^3k + 2ab^4k^6
+ 17a^3k^4b^2 + 5a^4k^5b + a^4k^4 + a^5k^5 + 4a^3k^3b + 12ab^3k^3 + 4ab^3k^2
+ 7a^2k^2b^2 - 2b^2ka + 7a^2b^2k + 8ak^4b + 8ak^5b^2 - 5b^3k^3 + b^3k^4 + 4b^3k^5
- 2bk^4 + 2b^2k^4 + 6a^2k^4 - 4b^2k^5 - 2ak^4 + 4a^2k^5 + a^4k + 2a^2b^2 + a^3b
+ 2ak^6b^2 - 11ak^4b^2 - 3a^2k^3b - 17a^2k^4b - b^2k + 2a^4k^6 + 4a^4k^5 - 8a^3k^5
+ 2a^5k^4 + 2b^4k^6 - b^4k^4 - a^2k^2 + a^5k^3 + a^3b^2k - 2a^3k^6 + 2a^2b^3k
- 2b^3k^6 + 2a^4k^2b + b^4ak + b^3a + b^5k^3 + 2b^4k^2 + b^3k + 2b^5k^4 + b^5k^5
"""


def q_factors() -> Tuple[MPoly, ...]:
    """The five factors of the denominator Q."""
    return (
        A + B,
        A * K**2 + A * K + A + B * K**2 + K,
        -K + A * K**2 + 2 * A * K - ONE + A + B + B * K**2 + B * K,
        B * K**2 + B * K + K + ONE + A * K**2,
        B * K**2 + 2 * B * K + B - K + A * K**2 + A * K,
    )


def build_Q() -> MPoly:
    q = ONE
    for factor in q_factors():
        q = q * factor
    return q


def build_P() -> MPoly:
    return parse_poly(_P_TERMS)


def quartic_factor_one() -> MPoly:
    """First nonnegative factor of the lower-bound difference."""
    return (
        A * K**2 * B + A * K**2 + 2 * A * K + A + B - ONE - K
        + B**2 * K - B * K**2 + B**2 * K**2
    )


def quartic_factor_two() -> MPoly:
    """Second nonnegative factor of the lower-bound difference."""
    return (
        A**2 * K**2 + A**2 * K + B * A - 2 * A * K + K
        + 2 * B * A * K - A * K**2 + A * K**2 * B + B * K**2
    )


def upper_linear_forms() -> Tuple[MPoly, MPoly]:
    """The two linear forms whose vanishing is the upper equality locus."""
    return (B * K + ONE - A - A * K, B + B * K - ONE + A * K - 2 * K)


class RationalFn:
    """Quotient num/den of two MPoly; den must be nonzero.

    No GCD reduction is ever applied; equality of quotients is checked by
    cross-multiplying.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly = ONE):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator polynomial")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFn is immutable")

    @staticmethod
    def _coerce(other) -> "RationalFn":
        if isinstance(other, RationalFn):
            return other
        return RationalFn(MPoly._coerce(other))

    def __add__(self, other) -> "RationalFn":
        other = RationalFn._coerce(other)
        return RationalFn(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, self.den)

    def __sub__(self, other) -> "RationalFn":
        return self + (-RationalFn._coerce(other))

    def __rsub__(self, other) -> "RationalFn":
        return RationalFn._coerce(other) - self

    def __mul__(self, other) -> "RationalFn":
        other = RationalFn._coerce(other)
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFn":
        other = RationalFn._coerce(other)
        return RationalFn(self.num * other.den, self.den * other.num)

    def equals(self, other: "RationalFn") -> bool:
        return (self.num * other.den - other.num * self.den).is_zero()

    def evaluate(self, a, b, k) -> Fraction:
        den = self.den.evaluate(a, b, k)
        if den == 0:
            raise ZeroDivisionError(f"denominator vanishes at ({a}, {b}, {k})")
        return self.num.evaluate(a, b, k) / den


# -- symbolic re-derivation of the ratio ----------------------------------

ProjPoint = Tuple[MPoly, MPoly, MPoly]  # (X, Y, W), affine point (X/W, Y/W)
LineCoeffs = Tuple[MPoly, MPoly, MPoly]


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def symbolic_figure():
    """Run the whole construction with symbolic (a, b, k).

    Returns (division points, cevian lines, inner vertices) where points are
    projective triples of MPoly and lines are coefficient triples of MPoly.
    """
    zero = MPoly.zero()
    verts: Tuple[ProjPoint, ...] = (
        (zero, zero, ONE),  # A
        (zero, ONE, ONE),  # B
        (A, B, ONE),  # C
        (ONE, zero, ONE),  # D
    )
    # X1 = X + k/(k+1) (next - X), cleared to projective weight (k+1)
    div: list[ProjPoint] = []
    for i in range(4):
        x, y, w = verts[i]
        nx, ny, nw = verts[(i + 1) % 4]
        # both vertex weights are 1 here, so scaling is direct
        div.append(((K + 1) * x + K * (nx - x), (K + 1) * y + K * (ny - y), K + 1))
    lines: Tuple[LineCoeffs, ...] = tuple(
        _cross(verts[i], div[(i + 1) % 4]) for i in range(4)
    )
    pairing = ((0, 3), (0, 1), (1, 2), (2, 3))
    inner = tuple(_cross(lines[i], lines[j]) for i, j in pairing)
    return tuple(div), lines, inner


def derive_ratio_symbolic() -> RationalFn:
    """Symbolic s/S over the canonical frame via the triangle decomposition
    2s = 2T(A,N,M) + 2T(A,M,L) - 2T(A,N,K) and 2S = a + b."""
    _, _, inner = symbolic_figure()
    kpt, lpt, mpt, npt = (RationalFnPoint(p) for p in inner)

    def twice_triangle(p: "RationalFnPoint", q: "RationalFnPoint") -> RationalFn:
        # doubled area of the triangle (origin, p, q)
        return p.x * q.y - q.x * p.y

    twice_s = (
        twice_triangle(npt, mpt) + twice_triangle(mpt, lpt) - twice_triangle(npt, kpt)
    )
    return twice_s / RationalFn(A + B)


class RationalFnPoint:
    """Affine view (X/W, Y/W) of a projective MPoly point."""

    __slots__ = ("x", "y")

    def __init__(self, proj: ProjPoint):
        px, py, pw = proj
        object.__setattr__(self, "x", RationalFn(px, pw))
        object.__setattr__(self, "y", RationalFn(py, pw))

    def __setattr__(self, name, value):
        raise AttributeError("RationalFnPoint is immutable")


# -- identity checks ------------------------------------------------------


def _must_be_zero(diff: MPoly, label: str) -> MPoly:
    if not diff.is_zero():
        expo, coeff = diff.leading_term()
        raise IdentityFailed(
            f"{label}: difference has leading monomial "
            f"a^{expo[0]} b^{expo[1]} k^{expo[2]} with coefficient {coeff}",
            monomial=expo,
            coefficient=coeff,
        )
    return diff


def check_ratio_identity() -> MPoly:
    """Symbolically derived s/S equals P/Q (by cross-multiplication)."""
    ratio = derive_ratio_symbolic()
    diff = ratio.num * build_Q() - build_P() * ratio.den
    return _must_be_zero(diff, "ratio identity s/S = P/Q")


def check_lower_identity() -> MPoly:
    """(k+1)(k^2+k+1) P - Q equals k^3 (a+b)(1+2k+2k^2) F1 F2."""
    lhs = (K + 1) * (K**2 + K + ONE) * build_P() - build_Q()
    rhs = (
        K**3 * (A + B) * (ONE + 2 * K + 2 * K**2)
        * quartic_factor_one() * quartic_factor_two()
    )
    return _must_be_zero(lhs - rhs, "lower-bound factorization")


def check_upper_identity() -> MPoly:
    """Q - (2k^2+2k+1) P equals k^4 (a+b) times the two squared linear forms."""
    f1, f2 = upper_linear_forms()
    lhs = build_Q() - (2 * K**2 + 2 * K + ONE) * build_P()
    rhs = K**4 * (A + B) * f1**2 * f2**2
    return _must_be_zero(lhs - rhs, "upper-bound factorization")


def positivity_rewrites():
    """The sub-expressions whose nonnegativity drives the lower bound.

    Returns (label, original, rewritten) triples plus the square-completed
    form of a^2 + 2ab - 2a + 1.
    """
    factors = q_factors()
    omega_slack = A + B - ONE  # nonnegative on Omega
    return (
        (
            "denominator factor 3",
            factors[2],
            omega_slack + K * omega_slack + A * K + K**2 * (A + B),
        ),
        (
            "denominator factor 5",
            factors[4],
            K * omega_slack + B * K + B + K**2 * (A + B),
        ),
        (
            "lower factor 1",
            quartic_factor_one(),
            omega_slack * (K**2 * B + ONE) + A * K**2 + (2 * A + B**2 - ONE) * K,
        ),
        (
            "lower factor 2",
            quartic_factor_two(),
            A * K**2 * omega_slack + A * B + B * K**2
            + (A**2 + 2 * A * B - 2 * A + ONE) * K,
        ),
        (
            "square completion",
            A**2 + 2 * A * B - 2 * A + ONE,
            (A - ONE) ** 2 + 2 * A * B,
        ),
    )


def check_rewrites() -> list:
    """Verify all five rewrite identities by exact expansion."""
    results = []
    for label, original, rewritten in positivity_rewrites():
        results.append(_must_be_zero(original - rewritten, f"rewrite: {label}"))
    return results


def ratio_value(a, b, k) -> Fraction:
    """P/Q evaluated at exact rationals (a, b, k)."""
    den = build_Q().evaluate(a, b, k)
    if den == 0:
        raise ZeroDivisionError(f"Q vanishes at ({a}, {b}, {k})")
    return build_P().evaluate(a, b, k) / den
