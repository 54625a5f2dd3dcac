"""Seeded exact sampling of the parameter wedge and bound verification.

Samples (a, b) from Omega = {a >= 0, b >= 0, a + b >= 1} on a grid plus
seeded random rationals with bounded denominators, then checks every sample
exactly against the sharp bounds

    1/((k+1)(k^2+k+1)) <= s/S <= 1/(2k^2+2k+1)   for k > 0,

records equality hits, and explores the open k in (-1, 0) regime where no
closed-form bounds are known.  All comparisons are exact rational
comparisons; all sampling is deterministic for a fixed SampleSpec.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import polynomials
from .construction import (
    KParam,
    crosscut_figure,
    theorem_bounds,
)
from .errors import CoincidentPoints, DomainError, LocusViolation, ParallelLines
from .exact_geometry import CanonicalParams, canonical_quadrilateral, in_omega

# Extremal parameter points that every sample set must contain: the two
# lower-bound equality points and the parallelogram point.
MANDATORY_POINTS = (
    (Fraction(1), Fraction(0)),
    (Fraction(0), Fraction(1)),
    (Fraction(1), Fraction(1)),
)


@dataclass(frozen=True)
class SampleSpec:
    seed: int = 0
    grid_step: Fraction = Fraction(1, 4)
    box_max: Fraction = Fraction(2)
    random_count: int = 200
    denominator_bound: int = 40
    extra_points: Tuple[Tuple[Fraction, Fraction], ...] = ()

    def __post_init__(self):
        if self.grid_step <= 0:
            raise ValueError("grid_step must be positive")
        if self.box_max < 1:
            raise ValueError("box_max must be at least 1")
        if self.random_count < 0 or self.denominator_bound < 1:
            raise ValueError("invalid random sampling parameters")


def sample_omega(spec: SampleSpec) -> List[CanonicalParams]:
    """Deterministic sample list: grid + seeded random rationals + mandatory
    extremal points, deduplicated in first-seen order."""
    seen = {}

    def push(a: Fraction, b: Fraction):
        if in_omega(a, b):
            seen.setdefault((a, b), None)

    for a, b in MANDATORY_POINTS:
        push(a, b)
    for a, b in spec.extra_points:
        push(Fraction(a), Fraction(b))

    steps = int(spec.box_max / spec.grid_step)
    for i in range(steps + 1):
        for j in range(steps + 1):
            push(i * spec.grid_step, j * spec.grid_step)

    rng = random.Random(spec.seed)
    produced = 0
    while produced < spec.random_count:
        a = _random_rational(rng, spec)
        b = _random_rational(rng, spec)
        if not in_omega(a, b):
            continue
        push(a, b)
        produced += 1

    return [CanonicalParams(a, b) for a, b in seen]


def _random_rational(rng: random.Random, spec: SampleSpec) -> Fraction:
    den = rng.randint(1, spec.denominator_bound)
    num_max = int(den * spec.box_max)
    return Fraction(rng.randint(0, num_max), den)


@dataclass
class BoundsReport:
    k: Fraction
    lower: Fraction
    upper: Fraction
    samples_checked: int
    violations: List[Tuple[Fraction, Fraction, Fraction]]  # (a, b, ratio)
    min_ratio: Fraction
    min_points: List[Tuple[Fraction, Fraction]]
    max_ratio: Fraction
    max_points: List[Tuple[Fraction, Fraction]]
    equality_hits: List[Tuple[Fraction, Fraction, str]]  # (a, b, "lower"/"upper")

    @property
    def ok(self) -> bool:
        return not self.violations


def ratio_at(params: CanonicalParams, k: KParam) -> Fraction:
    return crosscut_figure(canonical_quadrilateral(params), k).ratio


def verify_bounds(spec: SampleSpec, k) -> BoundsReport:
    """Check every sampled (a, b) exactly against the sharp bounds."""
    k = KParam.from_segment_ratio(k)
    lower, upper = theorem_bounds(k)
    samples = sample_omega(spec)

    violations = []
    hits = []
    min_ratio = max_ratio = None
    min_pts: List[Tuple[Fraction, Fraction]] = []
    max_pts: List[Tuple[Fraction, Fraction]] = []
    for params in samples:
        ratio = ratio_at(params, k)
        pt = (params.a, params.b)
        if ratio < lower or ratio > upper:
            violations.append((params.a, params.b, ratio))
        if ratio == lower:
            hits.append((params.a, params.b, "lower"))
        if ratio == upper:
            hits.append((params.a, params.b, "upper"))
        if min_ratio is None or ratio < min_ratio:
            min_ratio, min_pts = ratio, [pt]
        elif ratio == min_ratio:
            min_pts.append(pt)
        if max_ratio is None or ratio > max_ratio:
            max_ratio, max_pts = ratio, [pt]
        elif ratio == max_ratio:
            max_pts.append(pt)

    return BoundsReport(
        k=k.k,
        lower=lower,
        upper=upper,
        samples_checked=len(samples),
        violations=violations,
        min_ratio=min_ratio,
        min_points=min_pts,
        max_ratio=max_ratio,
        max_points=max_pts,
        equality_hits=hits,
    )


def upper_locus_lines(k: Fraction):
    """The two lines of upper-bound equality, solved for a as a function
    of b: a = (bk+1)/(k+1) and a = (1+2k-b-bk)/k."""
    return (
        lambda b: (b * k + 1) / (k + 1),
        lambda b: (1 + 2 * k - b - b * k) / k,
    )


def on_upper_locus(a: Fraction, b: Fraction, k: Fraction) -> bool:
    return (b * k + 1 - a - a * k) == 0 or (b + b * k - 1 + a * k - 2 * k) == 0


def equality_locus_check(k, count: int = 8, spec: Optional[SampleSpec] = None):
    """Verify the equality characterization of the sharp bounds.

    (i) the ratio equals the upper bound at ``count`` Omega-points on each
    of the two locus lines; (ii) it equals the lower bound at (1,0) and
    (0,1); (iii) it exceeds the lower bound strictly at every other sample;
    (iv) (1,1) lies on both lines.  Raises LocusViolation on any failure.
    """
    k = KParam.from_segment_ratio(k)
    lower, upper = theorem_bounds(k)
    kk = k.k

    for line_index, a_of_b in enumerate(upper_locus_lines(kk), start=1):
        collected = 0
        step = 0
        while collected < count:
            b = Fraction(step, 4)
            step += 1
            if step > 64 * count:
                raise LocusViolation(
                    f"could not collect {count} Omega-points on locus line "
                    f"{line_index} for k={kk}"
                )
            a = a_of_b(b)
            if not in_omega(a, b):
                continue
            ratio = ratio_at(CanonicalParams(a, b), k)
            if ratio != upper:
                raise LocusViolation(
                    f"ratio {ratio} != upper bound {upper} on locus line "
                    f"{line_index} at ({a}, {b}), k={kk}",
                    point=(a, b),
                )
            collected += 1

    for a, b in ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))):
        ratio = ratio_at(CanonicalParams(a, b), k)
        if ratio != lower:
            raise LocusViolation(
                f"ratio {ratio} != lower bound {lower} at ({a}, {b}), k={kk}",
                point=(a, b),
            )

    spec = spec or SampleSpec()
    for params in sample_omega(spec):
        pt = (params.a, params.b)
        if pt in ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))):
            continue
        ratio = ratio_at(params, k)
        if ratio <= lower:
            raise LocusViolation(
                f"ratio {ratio} <= lower bound {lower} away from the "
                f"degenerate points, at {pt}, k={kk}",
                point=pt,
            )

    one = Fraction(1)
    if not (on_upper_locus(one, one, kk)):
        raise LocusViolation("(1,1) is not on the upper locus", point=(1, 1))
    la, lb = upper_locus_lines(kk)
    if la(one) != one or lb(one) != one:
        raise LocusViolation("(1,1) does not satisfy both locus equations")


@dataclass
class ExplorationRecord:
    a: Fraction
    b: Fraction
    ratio: Optional[Fraction]
    simple: Optional[bool]
    inner_inside: Optional[bool]
    parallel_failure: Optional[str]
    pq_value: Optional[Fraction]  # P/Q where all Q-factors are nonzero
    pq_agrees: Optional[bool]


@dataclass
class ExplorationReport:
    """Empirical envelope for the open k in (-1, 0) regime.

    Entirely conjectural: no sharpness claim is made or implied.
    """

    k: Fraction
    records: List[ExplorationRecord]
    min_ratio: Optional[Fraction]
    min_points: List[Tuple[Fraction, Fraction]]
    max_ratio: Optional[Fraction]
    max_points: List[Tuple[Fraction, Fraction]]
    label: str = "CONJECTURAL"


def empirical_extrema(spec: SampleSpec, k) -> ExplorationReport:
    """Per-sample ratios for k in (-1, 0] via the vector-form construction.

    k = 0 is admitted solely as the boundary sanity case (every ratio is 1).
    Parallel-line failures are recorded per sample, never fatal.
    """
    k = KParam.from_any(k)
    if not (-1 < k.k <= 0):
        raise DomainError(f"exploration covers -1 < k <= 0, got {k.k}")

    q_factors = polynomials.q_factors()
    records: List[ExplorationRecord] = []
    min_ratio = max_ratio = None
    min_pts: List[Tuple[Fraction, Fraction]] = []
    max_pts: List[Tuple[Fraction, Fraction]] = []

    for params in sample_omega(spec):
        a, b = params.a, params.b
        pq = None
        if all(f.evaluate(a, b, k.k) != 0 for f in q_factors):
            pq = polynomials.ratio_value(a, b, k.k)
        try:
            fig = crosscut_figure(canonical_quadrilateral(params), k)
        except (ParallelLines, CoincidentPoints) as exc:
            records.append(
                ExplorationRecord(a, b, None, None, None, str(exc), pq, None)
            )
            continue
        ratio = fig.ratio
        records.append(
            ExplorationRecord(
                a, b, ratio, fig.inner_simple, fig.inner_inside, None, pq,
                None if pq is None else (pq == ratio),
            )
        )
        pt = (a, b)
        if min_ratio is None or ratio < min_ratio:
            min_ratio, min_pts = ratio, [pt]
        elif ratio == min_ratio:
            min_pts.append(pt)
        if max_ratio is None or ratio > max_ratio:
            max_ratio, max_pts = ratio, [pt]
        elif ratio == max_ratio:
            max_pts.append(pt)

    return ExplorationReport(
        k=k.k,
        records=records,
        min_ratio=min_ratio,
        min_points=min_pts,
        max_ratio=max_ratio,
        max_points=max_pts,
    )


@dataclass
class ScanRow:
    k: Fraction
    lower: Optional[Fraction]  # closed-form bounds for k > 0 only
    upper: Optional[Fraction]
    empirical_min: Optional[Fraction]
    empirical_max: Optional[Fraction]
    samples: int
    equality_hits: int


def scan_k(k_list: Sequence, spec: SampleSpec) -> List[ScanRow]:
    """One row per k: closed-form bounds (k > 0), empirical envelope,
    equality-hit count."""
    rows = []
    for k in k_list:
        k = Fraction(k)
        if k <= -1 or k == 0:
            raise DomainError(f"scan requires k > -1 and k != 0, got {k}")
        if k > 0:
            report = verify_bounds(spec, k)
            rows.append(
                ScanRow(
                    k=k,
                    lower=report.lower,
                    upper=report.upper,
                    empirical_min=report.min_ratio,
                    empirical_max=report.max_ratio,
                    samples=report.samples_checked,
                    equality_hits=len(report.equality_hits),
                )
            )
        else:
            report = empirical_extrema(spec, k)
            done = [r for r in report.records if r.ratio is not None]
            rows.append(
                ScanRow(
                    k=k,
                    lower=None,
                    upper=None,
                    empirical_min=report.min_ratio,
                    empirical_max=report.max_ratio,
                    samples=len(done),
                    equality_hits=0,
                )
            )
    return rows
