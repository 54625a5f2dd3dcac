"""Acceptance suite: one test per criterion, exact comparisons throughout.

Each test prints a single PASS line (visible with ``pytest -s`` or in the
captured output) once its criterion holds.
"""

import json
import random
from fractions import Fraction as F

from crosscut.cli import run_command
from crosscut.construction import (
    KParam,
    closed_form_inner_vertices,
    crosscut_figure,
    theorem_bounds,
)
from crosscut.exact_geometry import (
    AffineMap,
    CanonicalParams,
    canonical_quadrilateral,
    in_omega,
    quadrilateral,
    signed_area,
)
from crosscut.polynomials import (
    check_lower_identity,
    check_ratio_identity,
    check_rewrites,
    check_upper_identity,
    q_factors,
    quartic_factor_one,
    quartic_factor_two,
    ratio_value,
)
from crosscut.verifier import (
    SampleSpec,
    on_upper_locus,
    ratio_at,
    sample_omega,
    verify_bounds,
)

FULL_SPEC = SampleSpec(
    seed=20260824,
    grid_step=F(1, 20),
    box_max=F(4),
    random_count=2000,
    denominator_bound=40,
)

MEDIUM_SPEC = SampleSpec(
    seed=11, grid_step=F(1, 4), box_max=F(2), random_count=100
)


def test_criterion_1_identity_suite():
    assert check_ratio_identity().is_zero()
    assert check_lower_identity().is_zero()
    assert check_upper_identity().is_zero()
    assert all(diff.is_zero() for diff in check_rewrites())
    assert run_command(["verify-identities"]) == 0
    print("ACCEPTANCE PASS 1: identity suite (ratio, both factorizations, rewrites)")


def test_criterion_2_classical_case():
    report = verify_bounds(FULL_SPEC, 1)
    assert report.ok, f"violations: {report.violations[:3]}"
    assert report.lower == F(1, 6) and report.upper == F(1, 5)
    assert report.min_ratio == F(1, 6)
    assert set(report.min_points) == {(F(1), F(0)), (F(0), F(1))}
    lower_hits = {(a, b) for a, b, w in report.equality_hits if w == "lower"}
    assert lower_hits == {(F(1), F(0)), (F(0), F(1))}
    # maximum attained exactly on the two lines a = (b+1)/2 and a = 3 - 2b
    assert report.max_ratio == F(1, 5)
    upper_hits = {(a, b) for a, b, w in report.equality_hits if w == "upper"}
    for a, b in upper_hits:
        assert a == (b + 1) / 2 or a == 3 - 2 * b
    for params in sample_omega(FULL_SPEC):
        if on_upper_locus(params.a, params.b, F(1)):
            assert (params.a, params.b) in upper_hits
    print(
        f"ACCEPTANCE PASS 2: k=1 over {report.samples_checked} samples, "
        f"all ratios in [1/6, 1/5], equality loci exact"
    )


def test_criterion_3_general_k_bounds():
    expected = {
        F(1, 2): (F(8, 21), F(2, 5)),
        F(1): (F(1, 6), F(1, 5)),
        F(2): (F(1, 21), F(1, 13)),
    }
    for k in (F(1, 3), F(1, 2), F(1), F(2), F(5)):
        report = verify_bounds(FULL_SPEC, k)
        assert report.ok, f"k={k}: violations {report.violations[:3]}"
        assert report.lower == F(1) / ((k + 1) * (k**2 + k + 1))
        assert report.upper == F(1) / (2 * k**2 + 2 * k + 1)
        if k in expected:
            assert (report.lower, report.upper) == expected[k]
    print("ACCEPTANCE PASS 3: bounds hold for k in {1/3, 1/2, 1, 2, 5}")


def test_criterion_4_cross_oracle_equivalence():
    anchors = (
        (F(1), F(1), F(1), F(1, 5)),
        (F(1), F(0), F(1), F(1, 6)),
        (F(2), F(1), F(1), F(151, 756)),
    )
    for a, b, k, want in anchors:
        assert ratio_at(CanonicalParams(a, b), KParam.from_any(k)) == want
        assert ratio_value(a, b, k) == want

    samples = sample_omega(MEDIUM_SPEC)
    checked = 0
    for k in (F(1, 3), F(1, 2), F(1), F(2), F(5)):
        kp = KParam.from_any(k)
        for params in samples:
            geometric = ratio_at(params, kp)
            assert geometric == ratio_value(params.a, params.b, k)
            closed = closed_form_inner_vertices(params, kp)
            s_closed = abs(signed_area(closed))
            big_s = (params.a + params.b) / 2
            assert geometric == s_closed / big_s
            checked += 1
    print(f"ACCEPTANCE PASS 4: three oracles agree at {checked} (a, b, k) samples")


def test_criterion_5_affine_invariance():
    rng = random.Random(777)
    checked = 0
    while checked < 500:
        a = F(rng.randint(0, 16), 4)
        b = F(rng.randint(0, 16), 4)
        if not in_omega(a, b):
            continue
        entries = [F(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(6)]
        amap = AffineMap(*entries)
        if amap.determinant() == 0:
            continue
        quad = canonical_quadrilateral(CanonicalParams(a, b))
        try:
            mapped = quadrilateral(
                [(p.x, p.y) for p in map(amap.apply, quad.vertices())]
            )
        except ValueError:
            continue
        k = KParam.from_any(F(rng.randint(1, 12), rng.randint(1, 4)))
        assert crosscut_figure(quad, k).ratio == crosscut_figure(mapped, k).ratio
        checked += 1
    print("ACCEPTANCE PASS 5: 500 random affine maps leave the ratio unchanged")


def test_criterion_6_degenerate_cases():
    quad = canonical_quadrilateral(CanonicalParams(F(3, 2), F(1, 2)))
    fig = crosscut_figure(quad, KParam.from_any(0))
    assert fig.ratio == 1
    assert fig.inner == quad.vertices()

    k1 = KParam.from_any(1)
    fig = crosscut_figure(canonical_quadrilateral(CanonicalParams(F(1), F(0))), k1)
    assert fig.inner[2] == fig.inner[3]  # M = N
    assert fig.ratio == theorem_bounds(k1)[0]
    print("ACCEPTANCE PASS 6: k=0 identity and (1,0) lower-equality degeneracy")


def test_criterion_7_positivity_samples():
    rng = random.Random(4242)
    factors = q_factors()
    f1, f2 = quartic_factor_one(), quartic_factor_two()
    checked = 0
    for params in sample_omega(MEDIUM_SPEC):
        a, b = params.a, params.b
        k = F(rng.randint(1, 20), rng.randint(1, 5))
        q_val = F(1)
        for factor in factors:
            q_val *= factor.evaluate(a, b, k)
        assert q_val > 0
        assert factors[2].evaluate(a, b, k) > 0
        assert factors[4].evaluate(a, b, k) > 0
        parabola = 2 * a + b**2 - 1
        assert parabola >= 0 and (parabola > 0 or (a, b) == (F(0), F(1)))
        square = (a - 1) ** 2 + 2 * a * b
        assert square >= 0 and (square > 0 or (a, b) == (F(1), F(0)))
        v1 = f1.evaluate(a, b, k)
        assert v1 >= 0 and (v1 > 0 or (a, b) == (F(0), F(1)))
        v2 = f2.evaluate(a, b, k)
        assert v2 >= 0 and (v2 > 0 or (a, b) == (F(1), F(0)))
        checked += 1
    print(f"ACCEPTANCE PASS 7: positivity and equality loci exact at {checked} samples")


def test_criterion_8_open_problem_harness(tmp_path):
    args = ["explore", "--k", "-1/2", "--grid-step", "1/2", "--box", "2",
            "--random", "50", "--seed", "9"]
    out1 = tmp_path / "explore1.json"
    out2 = tmp_path / "explore2.json"
    assert run_command(args + ["--json", str(out1)]) == 0
    assert run_command(args + ["--json", str(out2)]) == 0
    assert out1.read_text() == out2.read_text()  # deterministic under the seed

    doc = json.loads(out1.read_text())
    assert doc["label"] == "CONJECTURAL"
    unit = [r for r in doc["records"] if r["a"] == "1/1" and r["b"] == "1/1"]
    assert unit and unit[0]["ratio"] == "2/1"
    flagged = [r for r in doc["records"] if r["pq_agrees"] is not None]
    assert flagged
    print("ACCEPTANCE PASS 8: negative-k exploration deterministic and labeled")
