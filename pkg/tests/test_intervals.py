"""Certified interval arithmetic: every enclosure must contain an
independently computed higher-precision reference value, and exact tags
must survive rational arithmetic untouched."""

import os
import subprocess
import sys
from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from turankit.errors import DomainError
from turankit.intervals import (CertifiedInterval, _raw_to_fraction, ci_exp,
                                ci_log, gamma_ratio, get_precision, log_gamma,
                                rational_power, set_precision,
                                working_precision)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=50)
positives = st.fractions(min_value=F(1, 50), max_value=30, max_denominator=50)


def _ref(fn, *args) -> F:
    """Independent reference: evaluate with mpmath at more than double the
    working precision and convert the binary result exactly."""
    with mpmath.workdps(2 * get_precision() + 10):
        mp_args = [mpmath.mpf(a.numerator) / a.denominator if isinstance(a, F)
                   else a for a in args]
        val = fn(*mp_args)
        return _raw_to_fraction(mpmath.mpf(val)._mpf_)


class TestConstruction:
    def test_from_fraction_is_exact(self):
        ci = CertifiedInterval.from_fraction(F(1, 3))
        assert ci.exact == F(1, 3)
        assert ci.width == 0
        assert ci.midpoint == F(1, 3)
        assert ci.lo <= F(1, 3) <= ci.hi

    def test_bounds_order_enforced(self):
        with pytest.raises(DomainError):
            CertifiedInterval.from_fraction_bounds(F(1), F(0))

    def test_widened(self):
        ci = CertifiedInterval.zero().widened(F(1, 100))
        assert ci.contains(0)
        assert ci.contains(F(1, 100))
        assert ci.contains(F(-1, 100))
        assert ci.width >= F(2, 100)

    def test_negative_widening_rejected(self):
        with pytest.raises(DomainError):
            CertifiedInterval.zero().widened(F(-1))


class TestExactPropagation:
    @given(rationals, rationals)
    def test_add_mul_sub(self, p, q):
        P, Q = CertifiedInterval.from_fraction(p), CertifiedInterval.from_fraction(q)
        assert (P + Q).exact == p + q
        assert (P - Q).exact == p - q
        assert (P * Q).exact == p * q

    @given(rationals, rationals.filter(lambda q: q != 0))
    def test_div(self, p, q):
        P, Q = CertifiedInterval.from_fraction(p), CertifiedInterval.from_fraction(q)
        assert (P / Q).exact == F(p, q)

    def test_div_by_zero_straddle(self):
        num = CertifiedInterval.from_fraction(1)
        den = CertifiedInterval.from_fraction_bounds(F(-1), F(1))
        with pytest.raises(DomainError):
            num / den

    @given(rationals, st.integers(min_value=0, max_value=6))
    def test_pow(self, p, n):
        P = CertifiedInterval.from_fraction(p)
        assert (P ** n).exact == p ** n

    def test_mixed_scalar(self):
        P = CertifiedInterval.from_fraction(F(1, 3))
        assert (P + F(1, 6)).exact == F(1, 2)
        assert (2 * P).exact == F(2, 3)
        assert (1 - P).exact == F(2, 3)


class TestPredicates:
    def test_sign(self):
        assert CertifiedInterval.from_fraction(F(3)).sign() == 1
        assert CertifiedInterval.from_fraction(F(-3)).sign() == -1
        assert CertifiedInterval.from_fraction(0).sign() == 0
        straddle = CertifiedInterval.from_fraction_bounds(F(-1), F(1))
        assert straddle.sign() is None

    def test_strict_order(self):
        a = CertifiedInterval.from_fraction_bounds(F(0), F(1))
        b = CertifiedInterval.from_fraction_bounds(F(2), F(3))
        assert a.strictly_less(b)
        assert b.strictly_greater(a)
        assert not a.overlaps(b)
        c = CertifiedInterval.from_fraction_bounds(F(1, 2), F(5, 2))
        assert a.overlaps(c) and c.overlaps(b)
        assert not a.strictly_less(c)


class TestTranscendental:
    def test_exp_contains_e(self):
        ci = ci_exp(CertifiedInterval.from_fraction(1))
        e_ref = _ref(mpmath.exp, F(1))
        assert ci.lo < e_ref < ci.hi
        assert ci.width < F(1, 10 ** (get_precision() - 2))

    def test_exp_zero_exact(self):
        assert ci_exp(CertifiedInterval.from_fraction(0)).exact == 1

    def test_log_contains_ref(self):
        ci = ci_log(CertifiedInterval.from_fraction(F(1, 3)))
        ref = _ref(mpmath.log, F(1, 3))
        assert ci.lo < ref < ci.hi

    def test_log_one_exact(self):
        assert ci_log(CertifiedInterval.from_fraction(1)).exact == 0

    def test_log_needs_positive(self):
        with pytest.raises(DomainError):
            ci_log(CertifiedInterval.from_fraction(0))

    @given(positives, rationals)
    @settings(max_examples=40, deadline=None)
    def test_rational_power_contains(self, base, expo):
        ci = rational_power(base, expo)
        ref = _ref(lambda b, e: mpmath.power(b, e), base, expo)
        assert ci.lo <= ref <= ci.hi

    def test_rational_power_integer_exact(self):
        assert rational_power(F(2, 3), 3).exact == F(8, 27)
        assert rational_power(F(2), -2).exact == F(1, 4)

    def test_sqrt_squares_back(self):
        ci = rational_power(F(2), F(1, 2)) ** 2
        assert ci.contains(F(2))


LOG_GAMMA_GRID = [F(1, 10), F(1, 3), F(1, 2), F(1), F(3, 2), F(5, 2),
                  F(29, 7), F(7), F(50), F(1001, 13)]


class TestLogGamma:
    @pytest.mark.parametrize("x", LOG_GAMMA_GRID)
    def test_contains_reference(self, x):
        ci = log_gamma(x)
        ref = _ref(mpmath.loggamma, x)
        assert ci.lo <= ref <= ci.hi
        assert ci.width < F(1, 10 ** (get_precision() - 2))

    def test_integer_points(self):
        # ln,Gamma(1) = ln,Gamma(2) = 0 and ln,Gamma(5) = ln 24
        assert log_gamma(1).contains(0)
        assert log_gamma(2).contains(0)
        ln24 = _ref(mpmath.log, F(24))
        ci = log_gamma(5)
        assert ci.lo <= ln24 <= ci.hi

    def test_needs_positive(self):
        with pytest.raises(DomainError):
            log_gamma(0)
        with pytest.raises(DomainError):
            log_gamma(F(-1, 2))

    @given(st.fractions(min_value=F(1, 20), max_value=20, max_denominator=40))
    @settings(max_examples=30, deadline=None)
    def test_recurrence(self, x):
        # ln Gamma(x+1) - ln Gamma(x) encloses ln x
        diff = log_gamma(x + 1) - log_gamma(x)
        assert diff.overlaps(ci_log(CertifiedInterval.from_fraction(x)))


class TestGammaRatio:
    def test_integer_shift_exact(self):
        assert gamma_ratio(F(1, 2), 2).exact == F(3, 4)
        assert gamma_ratio(F(3), 0).exact == 1
        assert gamma_ratio(F(2), 3).exact == 24

    @pytest.mark.parametrize("x,delta", [
        (F(1), F(1, 2)), (F(1, 2), F(1, 2)), (F(3, 2), F(5, 3)),
        (F(10), F(1, 4)), (F(2, 7), F(7, 2)),
    ])
    def test_fractional_shift_contains(self, x, delta):
        ci = gamma_ratio(x, delta)
        ref = _ref(lambda u, v: mpmath.gamma(u + v) / mpmath.gamma(u), x, delta)
        assert ci.lo <= ref <= ci.hi

    def test_sqrt_pi_case(self):
        # Gamma(3/2)/Gamma(1) = sqrt(pi)/2
        ci = gamma_ratio(1, F(1, 2))
        ref = _ref(lambda: mpmath.sqrt(mpmath.pi) / 2)
        assert ci.lo <= ref <= ci.hi

    @given(st.fractions(min_value=F(1, 10), max_value=10, max_denominator=30),
           st.fractions(min_value=0, max_value=4, max_denominator=30),
           st.fractions(min_value=0, max_value=4, max_denominator=30))
    @settings(max_examples=25, deadline=None)
    def test_multiplicative(self, x, d1, d2):
        lhs = gamma_ratio(x, d1 + d2)
        rhs = gamma_ratio(x, d1) * gamma_ratio(x + d1, d2)
        assert lhs.overlaps(rhs)

    def test_domain(self):
        with pytest.raises(DomainError):
            gamma_ratio(0, 1)
        with pytest.raises(DomainError):
            gamma_ratio(1, -1)


class TestPrecisionControl:
    def test_working_precision_restores(self):
        base = get_precision()
        with working_precision(2 * base):
            assert get_precision() == 2 * base
        assert get_precision() == base

    def test_higher_precision_tightens(self):
        base = get_precision()
        w_lo = log_gamma(F(1, 3)).width
        with working_precision(2 * base):
            w_hi = log_gamma(F(1, 3)).width
        assert w_hi < w_lo

    def test_too_small_rejected(self):
        with pytest.raises(DomainError):
            set_precision(2)

    def test_env_var_override(self):
        code = ("from turankit.intervals import get_precision;"
                "print(get_precision())")
        env = dict(os.environ, TURANKIT_PRECISION="44")
        out = subprocess.run([sys.executable, "-c", code], env=env,
                             capture_output=True, text=True)
        assert out.stdout.strip() == "44"
