import random
from fractions import Fraction as F

import pytest

from crosscut.errors import IdentityFailed
from crosscut.polynomials import (
    A,
    B,
    K,
    MPoly,
    ONE,
    RationalFn,
    build_P,
    build_Q,
    check_lower_identity,
    check_ratio_identity,
    check_rewrites,
    check_upper_identity,
    derive_ratio_symbolic,
    parse_poly,
    positivity_rewrites,
    q_factors,
    quartic_factor_one,
    quartic_factor_two,
    ratio_value,
    symbolic_figure,
    upper_linear_forms,
)
from crosscut.exact_geometry import in_omega


def test_basic_arithmetic():
    assert (A + B) * (A - B) == A**2 - B**2
    p = 3 * A * B**2 - K
    assert (p + (-1) * p).is_zero()
    assert (A + ONE) ** 3 == A**3 + 3 * A**2 + 3 * A + ONE
    assert (2 * K**2 + K).evaluate(0, 0, F(1, 2)) == 1


def test_canonical_form_merges_like_terms():
    p = A * B + B * A - 2 * A * B
    assert p.is_zero()
    assert MPoly({(1, 0, 0): F(0)}).is_zero()


def test_leading_term_graded_lex():
    p = A * K**2 + A**2 * B + K
    # total degree 3 twice; a^2 b beats a k^2 lexicographically in (a, b, k)
    assert p.leading_term() == ((2, 1, 0), F(1))


def test_parse_poly():
    assert parse_poly("a^2 - 2ab + b^2") == (A - B) ** 2
    assert parse_poly("-k + 3") == 3 - K
    assert parse_poly("2b^3ak") == 2 * A * B**3 * K


def test_build_Q_values_and_positivity():
    q = build_Q()
    assert q.evaluate(1, 1, 1) == 1250
    assert q.evaluate(2, 1, 1) == 9072
    rng = random.Random(41)
    for _ in range(50):
        a = F(rng.randint(0, 12), 4)
        b = F(rng.randint(0, 12), 4)
        if not in_omega(a, b):
            continue
        k = F(rng.randint(1, 12), rng.randint(1, 4))
        assert q.evaluate(a, b, k) > 0


def test_build_P_coefficients_and_values():
    p = build_P()
    assert p.coefficient((5, 0, 5)) == 1
    assert p.coefficient((0, 5, 3)) == 1
    assert p.evaluate(1, 1, 1) == 250
    assert p.evaluate(2, 1, 1) == 1812


def test_rational_fn_equality_by_cross_multiplication():
    half_a = RationalFn(A, MPoly.constant(2))
    also_half_a = RationalFn(A * B, 2 * B)
    assert half_a.equals(also_half_a)
    assert not half_a.equals(RationalFn(A, MPoly.constant(3)))


def test_symbolic_figure_lines_match_displayed_equations():
    """DA1 comes out proportional to kx + (k+1)y - k = 0, and likewise for
    the other three cevian lines."""
    _, lines, _ = symbolic_figure()
    ab1, bc1, cd1, da1 = lines

    def proportional(line, ref):
        p, q, r = line
        rp, rq, rr = ref
        return (
            (p * rq - q * rp).is_zero()
            and (p * rr - r * rp).is_zero()
            and (q * rr - r * rq).is_zero()
        )

    assert proportional(da1, (K, K + 1, -K))
    assert proportional(cd1, ((K + 1) * B, ONE - A * (K + 1), -B))
    assert proportional(ab1, (K * B + 1, -K * A, MPoly.zero()))
    assert proportional(bc1, (K + 1 - B, A + K, -(A + K)))


def test_derive_ratio_symbolic_values():
    ratio = derive_ratio_symbolic()
    assert ratio.evaluate(1, 1, 1) == F(1, 5)
    assert ratio.evaluate(1, 0, 1) == F(1, 6)
    assert ratio.evaluate(2, 1, 1) == F(151, 756)


def test_check_ratio_identity():
    assert check_ratio_identity().is_zero()


def test_check_lower_identity():
    assert check_lower_identity().is_zero()
    # spot values from the factor evaluations
    p, q = build_P(), build_Q()
    f1, f2 = quartic_factor_one(), quartic_factor_two()
    assert f1.evaluate(1, 1, 1) == 5 and f2.evaluate(1, 1, 1) == 5
    assert f1.evaluate(2, 1, 1) == 10 and f2.evaluate(2, 1, 1) == 12
    assert 6 * p.evaluate(1, 1, 1) - q.evaluate(1, 1, 1) == 250
    assert 6 * p.evaluate(2, 1, 1) - q.evaluate(2, 1, 1) == 1800


def test_check_upper_identity():
    assert check_upper_identity().is_zero()
    p, q = build_P(), build_Q()
    assert q.evaluate(1, 1, 1) - 5 * p.evaluate(1, 1, 1) == 0
    assert q.evaluate(2, 1, 1) - 5 * p.evaluate(2, 1, 1) == 12
    l1, l2 = upper_linear_forms()
    assert l1.evaluate(1, 1, 1) == 0 and l2.evaluate(1, 1, 1) == 0
    assert l1.evaluate(2, 1, 1) == -2 and l2.evaluate(2, 1, 1) == 1


def test_check_rewrites():
    assert all(diff.is_zero() for diff in check_rewrites())
    # the first lower factor vanishes identically in k at (0, 1)
    f1 = quartic_factor_one()
    for k in (F(1, 3), 1, 7):
        assert f1.evaluate(0, 1, k) == 0
    f2 = quartic_factor_two()
    for k in (F(1, 3), 1, 7):
        assert f2.evaluate(1, 0, k) == 0


def test_identity_failure_reports_leading_monomial():
    from crosscut.polynomials import _must_be_zero

    with pytest.raises(IdentityFailed) as info:
        _must_be_zero(A * K**2 - 3 * B, "tampered")
    assert info.value.monomial == (1, 0, 2)
    assert info.value.coefficient == 1


def test_random_evaluation_consistency():
    """Fast Schwartz-Zippel-style screen: all identities agree at 1000
    seeded random rational triples."""
    rng = random.Random(97)
    p, q = build_P(), build_Q()
    f1, f2 = quartic_factor_one(), quartic_factor_two()
    l1, l2 = upper_linear_forms()
    ratio = derive_ratio_symbolic()
    rewrites = positivity_rewrites()
    for _ in range(1000):
        a = F(rng.randint(-9, 9), rng.randint(1, 4))
        b = F(rng.randint(-9, 9), rng.randint(1, 4))
        k = F(rng.randint(-9, 9), rng.randint(1, 4))
        pv, qv = p.evaluate(a, b, k), q.evaluate(a, b, k)
        assert (k + 1) * (k**2 + k + 1) * pv - qv == (
            k**3 * (a + b) * (1 + 2 * k + 2 * k**2)
            * f1.evaluate(a, b, k) * f2.evaluate(a, b, k)
        )
        assert qv - (2 * k**2 + 2 * k + 1) * pv == (
            k**4 * (a + b)
            * l1.evaluate(a, b, k) ** 2 * l2.evaluate(a, b, k) ** 2
        )
        for _, orig, rewritten in rewrites:
            assert orig.evaluate(a, b, k) == rewritten.evaluate(a, b, k)
        assert ratio.num.evaluate(a, b, k) * qv == pv * ratio.den.evaluate(
            a, b, k
        )


def test_positivity_of_rewritten_denominator_factors():
    rng = random.Random(43)
    factors = q_factors()
    for _ in range(60):
        a = F(rng.randint(0, 16), 4)
        b = F(rng.randint(0, 16), 4)
        if not in_omega(a, b):
            continue
        k = F(rng.randint(1, 12), rng.randint(1, 4))
        assert factors[2].evaluate(a, b, k) > 0
        assert factors[4].evaluate(a, b, k) > 0
        parabola = 2 * a + b**2 - 1
        square = (a - 1) ** 2 + 2 * a * b
        assert parabola >= 0
        assert parabola > 0 or (a, b) == (0, 1)
        assert square >= 0
        assert square > 0 or (a, b) == (1, 0)
        f1 = quartic_factor_one().evaluate(a, b, k)
        f2 = quartic_factor_two().evaluate(a, b, k)
        assert f1 >= 0
        assert f1 > 0 or (a, b) == (0, 1)
        assert f2 >= 0
        assert f2 > 0 or (a, b) == (1, 0)


def test_upper_equality_locus_consequence():
    """Q - (2k^2+2k+1)P vanishes exactly where one of the linear forms does."""
    rng = random.Random(47)
    p, q = build_P(), build_Q()
    l1, l2 = upper_linear_forms()
    checked_zero = 0
    for _ in range(60):
        b = F(rng.randint(0, 12), 4)
        k = F(rng.randint(1, 10), rng.randint(1, 3))
        if rng.random() < 0.5:
            a = (b * k + 1) / (k + 1)  # on the first locus line
        else:
            a = F(rng.randint(0, 12), 4)
        if not in_omega(a, b):
            continue
        diff = q.evaluate(a, b, k) - (2 * k**2 + 2 * k + 1) * p.evaluate(a, b, k)
        forms = l1.evaluate(a, b, k) * l2.evaluate(a, b, k)
        assert (diff == 0) == (forms == 0)
        if diff == 0:
            checked_zero += 1
    assert checked_zero > 0


def test_ratio_value_matches_geometry():
    assert ratio_value(1, 1, 1) == F(1, 5)
    assert ratio_value(1, 0, 1) == F(1, 6)
    assert ratio_value(2, 1, 1) == F(151, 756)


def test_mpoly_is_immutable():
    with pytest.raises(AttributeError):
        A.terms = {}
