import math

import numpy as np
import pytest

from struvebounds import (
    DomainError,
    b_value,
    cond_bracket_sqrt,
    cond_bracket_via_bessel,
    cond_exact,
    prior_lower_bound,
)
from struvebounds.condition import cond_upward_residual


def CL(nu, x):
    return cond_exact("L", nu, x).value


class TestCondExact:
    def test_small_x_limit_is_order_plus_one(self):
        for nu in (-0.99, -0.3, 0.0, 2.0):
            assert CL(nu, 1e-6) == pytest.approx(nu + 1.0, abs=1e-9)

    def test_half_order_closed_form(self):
        for x in (0.4, 2.0, 11.0):
            want = x / math.tanh(0.5 * x) - 0.5
            assert CL(0.5, x) == pytest.approx(want, rel=1e-13)

    def test_upward_downward_consistency(self):
        assert cond_upward_residual(1.0, 5.0) < 1e-12
        for nu, x in [(0.0, 0.3), (2.5, 20.0), (-0.4, 1.0)]:
            assert cond_upward_residual(nu, x) < 1e-12

    def test_bessel_kind(self):
        # x I'_nu / I_nu at nu = 1/2 is x coth(x) - 1/2
        x = 3.0
        want = x / math.tanh(x) - 0.5
        assert cond_exact("I", 0.5, x).value == pytest.approx(want, rel=1e-13)

    def test_positive_for_L_above_minus_one(self):
        for nu in (-1.0, -0.5, 0.0, 5.0):
            for x in (1e-3, 1.0, 30.0):
                assert CL(nu, x) > 0.0

    def test_kind_validation(self):
        with pytest.raises(DomainError):
            cond_exact("K", 1.0, 1.0)


class TestBracketViaBessel:
    def test_half_order_closed_forms(self):
        # C(I_1/2) = x coth(x) - 1/2 sandwiches C(L_1/2) from below
        x = 2.0
        br = cond_bracket_via_bessel(0.5, x)
        assert br.lower == pytest.approx(x / math.tanh(x) - 0.5, rel=1e-13)
        assert br.lower < CL(0.5, x) < br.upper

    def test_flags_below_half(self):
        br = cond_bracket_via_bessel(-0.5, 1.0)
        assert not br.lower_valid and br.upper_valid
        assert CL(-0.5, 1.0) < br.upper

    def test_gap_closes_exponentially(self):
        br = cond_bracket_via_bessel(1.0, 50.0)
        assert br.upper - br.lower == pytest.approx(2.0 * b_value(1.0, 50.0))
        assert br.upper - br.lower < 1e-15


class TestSqrtBrackets:
    def test_eq29_half_order_point(self):
        br = cond_bracket_sqrt(0.5, 3.0, "eq29")
        assert br.lower == pytest.approx(2.5)
        assert br.lower < CL(0.5, 3.0) < br.upper

    def test_eq30_sandwich(self):
        for nu in (-1.0, -0.5, 0.0, 2.0):
            for x in (0.05, 1.0, 20.0):
                br = cond_bracket_sqrt(nu, x, "eq30")
                exact = CL(nu, x)
                assert br.lower < exact
                if br.upper_valid:
                    assert exact < br.upper

    def test_eq31_tight_at_zero(self):
        br = cond_bracket_sqrt(0.0, 1e-5, "eq31")
        assert br.lower == pytest.approx(1.0, abs=1e-9)
        assert br.lower < CL(0.0, 1e-5)

    def test_apti_large_x_behaviour(self):
        # upper behaves like x + nu^2/(2x) for large x
        br = cond_bracket_sqrt(1.0, 50.0, "apti")
        assert br.upper == pytest.approx(50.0 + 1.0 / 100.0, abs=1e-4)
        assert CL(1.0, 50.0) < br.upper

    def test_prior_variant_picks_max(self):
        br = cond_bracket_sqrt(1.0, 0.1, "prior")
        # near zero the constant bound nu+1 beats both hyperbolic ones
        assert br.lower_id == "prior_nup1"
        br = cond_bracket_sqrt(1.0, 10.0, "prior")
        assert br.lower_id == "prior_coth"

    def test_unknown_variant(self):
        with pytest.raises(DomainError):
            cond_bracket_sqrt(1.0, 1.0, "eq99")


class TestPriorBounds:
    def test_values(self):
        assert prior_lower_bound(1.0, 2.0, "prior_nup1") == 2.0
        assert prior_lower_bound(1.0, 2.0, "prior_xminus") == 1.0
        assert prior_lower_bound(0.5, 2.0, "prior_coth") == pytest.approx(
            2.0 / math.tanh(1.0) - 0.5)

    def test_coth_equality_at_half(self):
        for x in (0.5, 3.0):
            assert prior_lower_bound(0.5, x, "prior_coth") == pytest.approx(
                CL(0.5, x), rel=1e-13)

    def test_coth_dominates_linear(self):
        for nu in (0.5, 1.0, 4.0):
            for x in (0.2, 2.0, 30.0):
                assert prior_lower_bound(nu, x, "prior_coth") >= \
                    prior_lower_bound(nu, x, "prior_xminus")

    def test_xminus_fails_below_half_order(self):
        # the linear bound does not hold at order zero (and is registered
        # only from 1/2 up); order 0, x = 10 is a strict counterexample
        assert CL(0.0, 10.0) < 10.0
        with pytest.raises(DomainError):
            prior_lower_bound(0.0, 10.0, "prior_xminus")

    def test_xminus_holds_from_half_up(self):
        # the true gap drops below double resolution at large x, hence the
        # certification-style rounding allowance
        for nu in (0.5, 1.0, 2.5, 10.0):
            for x in (0.01, 1.0, 10.0, 50.0):
                exact = CL(nu, x)
                assert prior_lower_bound(nu, x, "prior_xminus") < exact + 1e-12 * abs(exact)


class TestOrderings:
    NUS = (-1.0, -0.5, 0.0, 0.5, 1.0, 2.5, 5.0, 10.0)
    XS = np.logspace(-2, math.log10(50.0), 12)

    def test_eq31_dominates_eq30_lower(self):
        for nu in self.NUS:
            for x in self.XS:
                x = float(x)
                a = cond_bracket_sqrt(nu, x, "eq31").lower
                b = cond_bracket_sqrt(nu, x, "eq30").lower
                assert a >= b - 1e-14 * abs(a)

    def test_eq30_upper_below_eq29_upper(self):
        for nu in self.NUS:
            if nu < -0.5:
                continue
            for x in self.XS:
                x = float(x)
                a = cond_bracket_sqrt(nu, x, "eq30").upper
                b = cond_bracket_sqrt(nu, x, "eq29").upper
                assert a <= b + 1e-14 * abs(b)

    def test_small_x_tightness(self):
        x = 1e-3
        for nu in (-0.5, 0.0, 1.0, 5.0):
            target = nu + 1.0
            for variant, side in (("eq30", "lower"), ("eq30", "upper"),
                                  ("eq31", "lower"), ("apti", "upper")):
                br = cond_bracket_sqrt(nu, x, variant)
                v = br.lower if side == "lower" else br.upper
                assert abs(v - target) < 1e-3

    def test_large_x_leading_behaviour(self):
        x = 200.0
        for nu in (-0.5, 0.0, 1.0, 5.0):
            for variant in ("eq29", "eq30", "eq31", "apti"):
                br = cond_bracket_sqrt(nu, x, variant)
                for v, ok in ((br.lower, br.lower_valid), (br.upper, br.upper_valid)):
                    if ok:
                        assert abs(v / x - 1.0) < 0.01


class TestSingleCrossovers:
    def count_sign_changes(self, f, xs):
        signs = [math.copysign(1.0, f(float(x))) for x in xs]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def test_eq29_vs_eq31_lower(self):
        xs = np.linspace(0.01, 50.0, 300)
        for nu in (0.5, 1.0, 2.5):
            f = lambda x: (cond_bracket_sqrt(nu, x, "eq29").lower
                           - cond_bracket_sqrt(nu, x, "eq31").lower)
            assert self.count_sign_changes(f, xs) == 1

    def test_apti_vs_eq30_upper(self):
        xs = np.linspace(0.01, 50.0, 300)
        for nu in (-0.5, 0.0, 1.0, 2.5, 5.0):
            f = lambda x: (cond_bracket_sqrt(nu, x, "apti").upper
                           - cond_bracket_sqrt(nu, x, "eq30").upper)
            assert self.count_sign_changes(f, xs) == 1
