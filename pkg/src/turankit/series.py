"""Exact truncated power series for three weighted hypergeometric families.

The package studies cross-product differences

    F(a+d, x) * F(b, x)  -  F(b+d, x) * F(a, x)

for three ways a shift parameter can enter a series with fixed positive
weights w_n:

* upper factor:  F(a, x) = sum w_n * (a)_n / n! * x^n
  (Kummer/Gauss functions shifted in an upper parameter),
* gamma factor:  F(a, x) = sum w_n * Gamma(a+n) * x^n,
* lower factor:  F(a, x) = sum w_n / (a)_n * x^n
  (shift in a lower parameter).

The difference's coefficients are written phi_m (upper), psi_m (gamma)
and lambda_m (lower).  phi and lambda are exact rationals.  psi_m is kept
in the factored form

    psi_m = Gamma(a+d)Gamma(b) * S1_m - Gamma(b+d)Gamma(a) * S2_m

with S1, S2 exact rational convolution sums, so its sign reduces to the
exact comparison of S1/S2 against a certified enclosure of the Gamma
quotient Gamma(b+d)Gamma(a) / [Gamma(a+d)Gamma(b)] (a single interval per
parameter tuple, exact when d is an integer).

Everything is formal: truncation order is fixed up front and no statement
about convergence is made or needed.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, PoleError
from .exact import poch_table
from .intervals import (CertifiedInterval, ci_exp, gamma_ratio, get_precision,
                        log_gamma)


class Family(enum.Enum):
    UPPER_FACTOR = "upper"
    GAMMA_FACTOR = "gamma"
    LOWER_FACTOR = "lower"


class Sign(enum.Enum):
    POSITIVE = "+"
    NEGATIVE = "-"
    ZERO = "0"
    INCONCLUSIVE = "?"


class MonotoneClass(enum.Enum):
    DECREASING = "decreasing"
    INCREASING = "increasing"
    CONSTANT = "constant"
    NEITHER = "neither"


@dataclass(frozen=True)
class WeightRule:
    """w_n = prod (u)_n / [prod (l)_n * (n!)^inv_factorial], all parameters
    positive rationals so that w_n > 0 for every n."""

    upper: tuple[Fraction, ...] = ()
    lower: tuple[Fraction, ...] = ()
    inv_factorial: bool = False

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(Fraction(u) for u in self.upper))
        object.__setattr__(self, "lower", tuple(Fraction(l) for l in self.lower))
        for p in self.upper + self.lower:
            if p <= 0:
                raise DomainError(f"weight parameters must be positive, got {p}")

    def weight(self, n: int) -> Fraction:
        num = Fraction(1)
        for u in self.upper:
            num *= poch_table(u, n)[n]
        den = Fraction(1)
        for l in self.lower:
            den *= poch_table(l, n)[n]
        if self.inv_factorial:
            den *= math.factorial(n)
        return num / den

    def ratio(self, n: int) -> Fraction:
        """w_n / w_{n-1} for n >= 1."""
        if n < 1:
            raise DomainError("weight ratio needs n >= 1")
        num = Fraction(1)
        for u in self.upper:
            num *= u + n - 1
        den = Fraction(1)
        for l in self.lower:
            den *= l + n - 1
        if self.inv_factorial:
            den *= n
        return num / den


@dataclass(frozen=True)
class HypSeriesSpec:
    family: Family
    weights: WeightRule
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise DomainError(f"truncation order must be >= 0, got {self.order}")


DEFAULT_ORDER = 40


def kummer_upper(c, order: int = DEFAULT_ORDER) -> HypSeriesSpec:
    """1F1(a; c; x) viewed as an upper-factor family: w_n = 1/(c)_n."""
    return HypSeriesSpec(Family.UPPER_FACTOR, WeightRule(lower=(Fraction(c),)), order)


def gauss_upper(b, c, order: int = DEFAULT_ORDER) -> HypSeriesSpec:
    """2F1(a, b; c; x) shifted in a: w_n = (b)_n/(c)_n."""
    return HypSeriesSpec(
        Family.UPPER_FACTOR, WeightRule(upper=(Fraction(b),), lower=(Fraction(c),)), order
    )


def pfq_upper(uppers, lowers, order: int = DEFAULT_ORDER) -> HypSeriesSpec:
    """(q+1)Fq(a, uppers; lowers; x) shifted in a."""
    return HypSeriesSpec(
        Family.UPPER_FACTOR,
        WeightRule(upper=tuple(Fraction(u) for u in uppers),
                   lower=tuple(Fraction(l) for l in lowers)),
        order,
    )


def binomial_upper(order: int = DEFAULT_ORDER) -> HypSeriesSpec:
    """Constant weights w_n = 1, i.e. F(a, x) = (1-x)^-a."""
    return HypSeriesSpec(Family.UPPER_FACTOR, WeightRule(), order)


def kummer_gamma(c, order: int = DEFAULT_ORDER) -> HypSeriesSpec:
    """Gamma(a) 1F1(a; c; x) as a gamma-factor family: w_n = 1/[(c)_n n!]."""
    return HypSeriesSpec(
        Family.GAMMA_FACTOR, WeightRule(lower=(Fraction(c),), inv_factorial=True), order
    )


def kummer_lower(a0, order: int = DEFAULT_ORDER) -> HypSeriesSpec:
    """1F1(a0; c; x) shifted in c: w_n = (a0)_n/n!."""
    return HypSeriesSpec(
        Family.LOWER_FACTOR, WeightRule(upper=(Fraction(a0),), inv_factorial=True), order
    )


def gauss_lower(a0, b0, order: int = DEFAULT_ORDER) -> HypSeriesSpec:
    """2F1(a0, b0; c; x) shifted in c: w_n = (a0)_n (b0)_n / n!."""
    return HypSeriesSpec(
        Family.LOWER_FACTOR,
        WeightRule(upper=(Fraction(a0), Fraction(b0)), inv_factorial=True),
        order,
    )


def weight_sequence(spec: HypSeriesSpec, n: int) -> Fraction:
    return spec.weights.weight(n)


def weight_ratio_class(spec: HypSeriesSpec) -> MonotoneClass:
    """Strict monotonicity class of n -> w_n/w_{n-1} over the truncation
    range.  The upper-factor sign theorem assumes this; it is checked,
    not trusted."""
    ratios = [spec.weights.ratio(n) for n in range(1, spec.order + 1)]
    if len(ratios) < 2:
        return MonotoneClass.CONSTANT
    if all(r2 == r1 for r1, r2 in zip(ratios, ratios[1:])):
        return MonotoneClass.CONSTANT
    if all(r2 < r1 for r1, r2 in zip(ratios, ratios[1:])):
        return MonotoneClass.DECREASING
    if all(r2 > r1 for r1, r2 in zip(ratios, ratios[1:])):
        return MonotoneClass.INCREASING
    return MonotoneClass.NEITHER


@dataclass
class TruncatedSeries:
    """Coefficients c_0..c_M of a formal power series.  For the
    gamma-factor family the stored coefficients are the rational parts and
    ``gamma_scale=a`` records an overall Gamma(a) factor."""

    coeffs: list[Fraction]
    gamma_scale: Fraction | None = None

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def _check_plain(self, other: "TruncatedSeries"):
        if self.gamma_scale is not None or other.gamma_scale is not None:
            raise DomainError("arithmetic on gamma-scaled series is not defined; "
                              "use the factored psi path instead")
        if self.order != other.order:
            raise DomainError(
                f"order mismatch: {self.order} vs {other.order}")

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_plain(other)
        m = self.order
        out = [Fraction(0)] * (m + 1)
        for i, ci in enumerate(self.coeffs):
            if ci == 0:
                continue
            for j in range(m + 1 - i):
                cj = other.coeffs[j]
                if cj != 0:
                    out[i + j] += ci * cj
        return TruncatedSeries(out)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_plain(other)
        return TruncatedSeries([x - y for x, y in zip(self.coeffs, other.coeffs)])


def build_series(spec: HypSeriesSpec, shift_param) -> TruncatedSeries:
    """Series of the spec's family with the shifted slot set to
    ``shift_param``."""
    a = Fraction(shift_param)
    m = spec.order
    w = [spec.weights.weight(n) for n in range(m + 1)]
    if spec.family is Family.UPPER_FACTOR:
        pa = poch_table(a, m)
        return TruncatedSeries(
            [w[n] * pa[n] / math.factorial(n) for n in range(m + 1)])
    if spec.family is Family.GAMMA_FACTOR:
        if a <= 0:
            raise DomainError(f"gamma-factor series needs shift parameter > 0, got {a}")
        pa = poch_table(a, m)
        return TruncatedSeries([w[n] * pa[n] for n in range(m + 1)], gamma_scale=a)
    if spec.family is Family.LOWER_FACTOR:
        pa = poch_table(a, m)
        for n in range(1, m + 1):
            if pa[n] == 0:
                raise PoleError(
                    f"lower-factor series has a pole: ({a})_{n} = 0")
        return TruncatedSeries([w[n] / pa[n] for n in range(m + 1)])
    raise DomainError(f"unknown family {spec.family}")


def _shift_quadruple(a, b, delta):
    a, b, delta = Fraction(a), Fraction(b), Fraction(delta)
    return a, b, delta


def phi_coefficients(spec: HypSeriesSpec, a, b, delta, order: int | None = None):
    """Coefficients of F(a+d,x)F(b,x) - F(b+d,x)F(a,x) for the
    upper-factor family, exact via Cauchy products.  phi_0 = phi_1 = 0."""
    if spec.family is not Family.UPPER_FACTOR:
        raise DomainError("phi_coefficients needs an upper-factor family")
    a, b, delta = _shift_quadruple(a, b, delta)
    if order is not None and order != spec.order:
        spec = HypSeriesSpec(spec.family, spec.weights, order)
    lhs = build_series(spec, a + delta) * build_series(spec, b)
    rhs = build_series(spec, b + delta) * build_series(spec, a)
    return (lhs - rhs).coeffs


def lambda_coefficients(spec: HypSeriesSpec, a, b, delta, order: int | None = None):
    """Coefficients of the cross-product difference for the lower-factor
    family, exact via Cauchy products.  lambda_0 = 0."""
    if spec.family is not Family.LOWER_FACTOR:
        raise DomainError("lambda_coefficients needs a lower-factor family")
    a, b, delta = _shift_quadruple(a, b, delta)
    if order is not None and order != spec.order:
        spec = HypSeriesSpec(spec.family, spec.weights, order)
    lhs = build_series(spec, a + delta) * build_series(spec, b)
    rhs = build_series(spec, b + delta) * build_series(spec, a)
    return (lhs - rhs).coeffs


def gamma_quotient(a, b, delta) -> CertifiedInterval:
    """Enclosure of Gamma(b+d)Gamma(a) / [Gamma(a+d)Gamma(b)]; exact when
    d is an integer."""
    return gamma_ratio(b, delta) / gamma_ratio(a, delta)


@lru_cache(maxsize=256)
def _gamma_pair(a: Fraction, b: Fraction, delta: Fraction, dps: int):
    # shared scale factors Gamma(a+d)Gamma(b) and Gamma(a)Gamma(b+d);
    # keyed on precision so escalation does not reuse stale enclosures
    g1 = ci_exp(log_gamma(a + delta) + log_gamma(b))
    g2 = ci_exp(log_gamma(a) + log_gamma(b + delta))
    return g1, g2


@dataclass
class PsiCoefficient:
    """psi_m in factored form plus its certified sign."""

    m: int
    s1: Fraction
    s2: Fraction
    sign: Sign


def psi_coefficients(spec: HypSeriesSpec, a, b, delta, order: int | None = None,
                     quotient: CertifiedInterval | None = None):
    """Factored psi_m list for the gamma-factor family with certified
    signs.  ``quotient`` may be passed to reuse or escalate the Gamma
    quotient enclosure."""
    if spec.family is not Family.GAMMA_FACTOR:
        raise DomainError("psi_coefficients needs a gamma-factor family")
    a, b, delta = _shift_quadruple(a, b, delta)
    if a <= 0 or b <= 0:
        raise DomainError("gamma-factor shifts must be positive")
    m_top = spec.order if order is None else order
    w = [spec.weights.weight(n) for n in range(m_top + 1)]
    pad = poch_table(a + delta, m_top)
    pbd = poch_table(b + delta, m_top)
    pa = poch_table(a, m_top)
    pb = poch_table(b, m_top)
    degenerate = a == b
    if not degenerate and quotient is None:
        quotient = gamma_quotient(a, b, delta)
    out = []
    for m in range(m_top + 1):
        s1 = Fraction(0)
        s2 = Fraction(0)
        for k in range(m + 1):
            wk = w[k] * w[m - k]
            s1 += wk * pad[k] * pb[m - k]
            s2 += wk * pbd[k] * pa[m - k]
        if degenerate:
            sign = Sign.ZERO
        else:
            sign = _psi_sign(s1, s2, quotient)
        out.append(PsiCoefficient(m, s1, s2, sign))
    return out


def _psi_sign(s1: Fraction, s2: Fraction, quotient: CertifiedInterval) -> Sign:
    # psi_m < 0  iff  S1/S2 < Gamma(b+d)Gamma(a)/[Gamma(a+d)Gamma(b)];
    # S2 > 0 because every term is a product of positive factors.
    r = s1 / s2
    if quotient.exact is not None:
        if r < quotient.exact:
            return Sign.NEGATIVE
        if r > quotient.exact:
            return Sign.POSITIVE
        return Sign.ZERO
    if r < quotient.lo:
        return Sign.NEGATIVE
    if r > quotient.hi:
        return Sign.POSITIVE
    return Sign.INCONCLUSIVE


@dataclass
class MkProfile:
    """Half-range decomposition of a single coefficient: the values M_k,
    k = 0..floor(m/2), whose weighted sum gives phi_m (or lambda_m, or the
    factored psi_m)."""

    m: int
    family: Family
    values: list  # Fraction for upper/lower families, CertifiedInterval for gamma

    def total(self):
        acc = self.values[0]
        for v in self.values[1:]:
            acc = acc + v
        return acc

    def weighted_total(self, weights: "WeightRule"):
        """sum_k w_k w_{m-k} M_k; equals the corresponding coefficient."""
        acc = None
        for k, v in enumerate(self.values):
            term = v * (weights.weight(k) * weights.weight(self.m - k))
            acc = term if acc is None else acc + term
        return acc

    def signs(self) -> list[Sign]:
        out = []
        for v in self.values:
            if isinstance(v, CertifiedInterval):
                s = v.sign()
                out.append(Sign.INCONCLUSIVE if s is None else
                           (Sign.ZERO if s == 0 else
                            (Sign.POSITIVE if s > 0 else Sign.NEGATIVE)))
            else:
                out.append(Sign.ZERO if v == 0 else
                           (Sign.POSITIVE if v > 0 else Sign.NEGATIVE))
        return out

    def sign_change_count(self) -> int:
        """Number of sign alternations along k, zeros skipped."""
        seq = [s for s in self.signs() if s in (Sign.POSITIVE, Sign.NEGATIVE)]
        return sum(1 for s1, s2 in zip(seq, seq[1:]) if s1 is not s2)


def mk_profile(spec: HypSeriesSpec, a, b, delta, m: int) -> MkProfile:
    """The M_k values for coefficient index m >= 2 (weights play no role:
    the profile depends only on the shift parameters and the family)."""
    if m < 2:
        raise DomainError(f"profile needs m >= 2, got {m}")
    a, b, delta = _shift_quadruple(a, b, delta)
    pad = poch_table(a + delta, m)
    pbd = poch_table(b + delta, m)
    pa = poch_table(a, m)
    pb = poch_table(b, m)
    half = m // 2
    if spec.family is Family.UPPER_FACTOR:
        vals = []
        for k in range(half + 1):
            denom = math.factorial(k) * math.factorial(m - k)
            if 2 * k < m:
                num = (pad[k] * pb[m - k] + pad[m - k] * pb[k]
                       - pa[k] * pbd[m - k] - pa[m - k] * pbd[k])
            else:
                num = pad[k] * pb[m - k] - pa[k] * pbd[m - k]
            vals.append(num / denom)
        return MkProfile(m, spec.family, vals)
    if spec.family is Family.LOWER_FACTOR:
        for table, name in ((pad, a + delta), (pbd, b + delta), (pa, a), (pb, b)):
            if any(table[n] == 0 for n in range(1, m + 1)):
                raise PoleError(f"profile has a pole at shift parameter {name}")
        vals = []
        for k in range(half + 1):
            if 2 * k < m:
                num = (1 / (pad[k] * pb[m - k]) + 1 / (pad[m - k] * pb[k])
                       - 1 / (pa[m - k] * pbd[k]) - 1 / (pa[k] * pbd[m - k]))
            else:
                num = 1 / (pad[k] * pb[m - k]) - 1 / (pa[k] * pbd[m - k])
            vals.append(num)
        return MkProfile(m, spec.family, vals)
    if spec.family is Family.GAMMA_FACTOR:
        if a <= 0 or b <= 0:
            raise DomainError("gamma-factor profile needs positive shifts")
        g1, g2 = _gamma_pair(a, b, delta, get_precision())
        vals = []
        for k in range(half + 1):
            if 2 * k < m:
                p = pad[k] * pb[m - k] + pad[m - k] * pb[k]
                q = pa[k] * pbd[m - k] + pa[m - k] * pbd[k]
            else:
                p = pad[k] * pb[m - k]
                q = pa[k] * pbd[m - k]
            vals.append(g1 * p - g2 * q)
        return MkProfile(m, spec.family, vals)
    raise DomainError(f"unknown family {spec.family}")
