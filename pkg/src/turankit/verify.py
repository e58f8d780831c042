"""Grid verification of coefficient-sign and two-sided-bound claims.

Each checker turns one claim into an executable pass/fail over exact or
certified arithmetic:

* thm1: upper-factor cross-product difference has one-signed exact
  coefficients (positive for decreasing weight ratios when b > a > 0,
  negative for increasing; identically zero for constant), together with
  the half-range profile structure (sum zero, single sign change);
* thm2: gamma-factor coefficients psi_m are certified negative for
  b > a > 0 via the factored form, with one precision escalation for any
  index whose interval comparison is undecided;
* thm3: lower-factor coefficients lambda_m are exactly negative for
  b > a > 0, profile values all negative;
* corollary/turan: the function-level two-sided bound
  Gamma-quotient < f(b+d,x)f(a,x)/[f(a+d,x)f(b,x)] < 1 pointwise on an
  x grid with certified strictness, plus sharpness near the large-x end.

Orientation is antisymmetric: swapping a and b negates every coefficient,
so checkers accept either order and flip the expected sign.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .evalf import cross_ratio
from .intervals import (CertifiedInterval, gamma_ratio, get_precision,
                        working_precision)
from .series import (DEFAULT_ORDER, Family, HypSeriesSpec, MonotoneClass,
                     Sign, binomial_upper, gamma_quotient, gauss_lower,
                     gauss_upper, kummer_gamma, kummer_lower, kummer_upper,
                     lambda_coefficients, mk_profile, phi_coefficients,
                     psi_coefficients, weight_ratio_class, _psi_sign)


class Verdict(enum.Enum):
    VERIFIED = "verified"
    VERIFIED_DEGENERATE = "verified-degenerate"
    VIOLATED = "violated"
    INCONCLUSIVE = "inconclusive"


@dataclass
class SignReport:
    theorem_id: str
    params: dict
    truncation_order: int
    per_index_sign: list[Sign]
    first_violation: int | None
    mk_single_sign_change: bool | None
    mk_all_negative: bool | None
    verdict: Verdict
    reason: str | None = None
    inconclusive_indices: list[int] = field(default_factory=list)
    escalated: bool = False
    inconclusive_before_escalation: int = 0

    @property
    def parameter_tuple(self) -> tuple:
        return tuple(self.params.values())


def _sign_of(value: Fraction) -> Sign:
    if value > 0:
        return Sign.POSITIVE
    if value < 0:
        return Sign.NEGATIVE
    return Sign.ZERO


def _expected_sign(cls: MonotoneClass, a: Fraction, b: Fraction) -> Sign | None:
    """Claimed sign of the upper-factor coefficients for indices >= 2."""
    if cls is MonotoneClass.CONSTANT:
        return Sign.ZERO
    if cls is MonotoneClass.NEITHER:
        return None
    base = Sign.POSITIVE if cls is MonotoneClass.DECREASING else Sign.NEGATIVE
    if b > a:
        return base
    return Sign.NEGATIVE if base is Sign.POSITIVE else Sign.POSITIVE


def verify_theorem1(spec: HypSeriesSpec, a, b, delta, M: int | None = None) -> SignReport:
    """Exact sign check of the upper-factor coefficients phi_m for
    2 <= m <= M plus the profile invariants: sum of M_k exactly zero and
    exactly one sign change along k, for every m."""
    a, b, delta = Fraction(a), Fraction(b), Fraction(delta)
    if delta <= 0 or a < 0 or b < 0:
        raise DomainError("need delta > 0 and nonnegative shifts")
    if M is None:
        M = spec.order
    if spec.order != M:
        spec = HypSeriesSpec(spec.family, spec.weights, M)
    params = {"a": a, "b": b, "delta": delta}
    cls = weight_ratio_class(spec)
    phi = phi_coefficients(spec, a, b, delta)
    signs = [_sign_of(v) for v in phi]

    if a == b:
        verdict = (Verdict.VERIFIED_DEGENERATE
                   if all(s is Sign.ZERO for s in signs) else Verdict.VIOLATED)
        return SignReport("thm1", params, M, signs,
                          None if verdict is not Verdict.VIOLATED else 0,
                          None, None, verdict,
                          reason="degenerate equal shifts")

    expected = _expected_sign(cls, a, b)
    if expected is None:
        return SignReport("thm1", params, M, signs, None, None, None,
                          Verdict.INCONCLUSIVE,
                          reason="weight ratio sequence is not monotone; "
                                 "no sign is claimed")

    first_violation = None
    if phi[0] != 0 or phi[1] != 0:
        first_violation = 0 if phi[0] != 0 else 1
    else:
        for m in range(2, M + 1):
            if signs[m] is not expected:
                first_violation = m
                break

    single_change = True
    total_zero = True
    m0_sign = Sign.NEGATIVE if b > a else Sign.POSITIVE
    for m in range(2, M + 1):
        prof = mk_profile(spec, a, b, delta, m)
        if prof.total() != 0:
            total_zero = False
        ok = (prof.sign_change_count() == 1
              and prof.signs()[0] is m0_sign)
        if not ok:
            single_change = False

    if first_violation is not None or not total_zero or not single_change:
        reason = None
        if not total_zero:
            reason = "profile sum nonzero"
        elif not single_change:
            reason = "profile sign pattern broken"
        return SignReport("thm1", params, M, signs, first_violation,
                          single_change, None, Verdict.VIOLATED, reason)
    return SignReport("thm1", params, M, signs, None, True, None,
                      Verdict.VERIFIED)


def verify_theorem2(spec: HypSeriesSpec, a, b, delta, M: int | None = None,
                    check_profiles: bool = True) -> SignReport:
    """Certified negativity of the gamma-factor coefficients psi_m for
    0 <= m <= M (b > a; positive when a > b).  Undecided indices get one
    retry with the Gamma-quotient enclosure recomputed at doubled
    precision."""
    a, b, delta = Fraction(a), Fraction(b), Fraction(delta)
    if delta <= 0 or a <= 0 or b <= 0:
        raise DomainError("need delta > 0 and positive shifts")
    if M is None:
        M = spec.order
    if spec.order != M:
        spec = HypSeriesSpec(spec.family, spec.weights, M)
    params = {"a": a, "b": b, "delta": delta}
    psis = psi_coefficients(spec, a, b, delta)
    signs = [p.sign for p in psis]

    if a == b:
        verdict = (Verdict.VERIFIED_DEGENERATE
                   if all(s is Sign.ZERO for s in signs) else Verdict.VIOLATED)
        return SignReport("thm2", params, M, signs, None, None, None, verdict,
                          reason="degenerate equal shifts")

    expected = Sign.NEGATIVE if b > a else Sign.POSITIVE
    pending = [p.m for p in psis if p.sign is Sign.INCONCLUSIVE]
    before = len(pending)
    escalated = False
    if pending:
        escalated = True
        with working_precision(2 * get_precision()):
            quot = gamma_quotient(a, b, delta)
            for m in pending:
                signs[m] = _psi_sign(psis[m].s1, psis[m].s2, quot)

    first_violation = None
    for m, s in enumerate(signs):
        if s is Sign.INCONCLUSIVE:
            continue
        if s is not expected:
            first_violation = m
            break
    still_open = [m for m, s in enumerate(signs) if s is Sign.INCONCLUSIVE]

    mk_all_neg = None
    if check_profiles and first_violation is None:
        mk_all_neg = True
        want = -1 if b > a else 1
        for m in range(2, M + 1):
            prof = mk_profile(spec, a, b, delta, m)
            vals = prof.signs()
            if any(s is (Sign.POSITIVE if want < 0 else Sign.NEGATIVE) for s in vals):
                return SignReport("thm2", params, M, signs, m, None, False,
                                  Verdict.VIOLATED,
                                  reason="profile value with certified wrong sign")
            if any(s is Sign.INCONCLUSIVE for s in vals):
                mk_all_neg = None

    if first_violation is not None:
        verdict = Verdict.VIOLATED
    elif still_open:
        verdict = Verdict.INCONCLUSIVE
    else:
        verdict = Verdict.VERIFIED
    return SignReport("thm2", params, M, signs, first_violation, None,
                      mk_all_neg, verdict,
                      reason=("undecided indices remain after escalation"
                              if still_open else None),
                      inconclusive_indices=still_open, escalated=escalated,
                      inconclusive_before_escalation=before)


def verify_theorem3(spec: HypSeriesSpec, a, b, delta, M: int | None = None) -> SignReport:
    """Exact negativity of the lower-factor coefficients lambda_m for
    1 <= m <= M (b > a; positive when a > b), plus all profile values
    strictly one-signed."""
    a, b, delta = Fraction(a), Fraction(b), Fraction(delta)
    if delta <= 0 or a <= 0 or b <= 0:
        raise DomainError("need delta > 0 and positive shifts")
    if M is None:
        M = spec.order
    if spec.order != M:
        spec = HypSeriesSpec(spec.family, spec.weights, M)
    params = {"a": a, "b": b, "delta": delta}
    lam = lambda_coefficients(spec, a, b, delta)
    signs = [_sign_of(v) for v in lam]

    if a == b:
        verdict = (Verdict.VERIFIED_DEGENERATE
                   if all(s is Sign.ZERO for s in signs) else Verdict.VIOLATED)
        return SignReport("thm3", params, M, signs, None, None, None, verdict,
                          reason="degenerate equal shifts")

    expected = Sign.NEGATIVE if b > a else Sign.POSITIVE
    first_violation = None
    if lam[0] != 0:
        first_violation = 0
    else:
        for m in range(1, M + 1):
            if signs[m] is not expected:
                first_violation = m
                break

    mk_all_neg = True
    for m in range(2, M + 1):
        prof = mk_profile(spec, a, b, delta, m)
        if any(s is not expected for s in prof.signs()):
            mk_all_neg = False
    if first_violation is not None or not mk_all_neg:
        return SignReport("thm3", params, M, signs, first_violation, None,
                          mk_all_neg, Verdict.VIOLATED,
                          reason=None if mk_all_neg else "profile value off-sign")
    return SignReport("thm3", params, M, signs, None, None, True,
                      Verdict.VERIFIED)


@dataclass
class TwoSidedBoundReport:
    params: dict
    x_grid: list[Fraction]
    ratio_values: list[CertifiedInterval]
    lower_bound: CertifiedInterval
    upper_bound: Fraction
    within: list  # True / False / None per x
    approaches_lower: bool
    rel_gap_at_top: float
    verdict: Verdict


def verify_corollary_twosided(spec: HypSeriesSpec, a, b, delta, x_grid,
                              tol=None, sharpness_rel: float = 0.05) -> TwoSidedBoundReport:
    """Pointwise certified check of
    Gamma-quotient < f(b+d,x)f(a,x)/[f(a+d,x)f(b,x)] < 1 on positive x,
    for decreasing-weight-ratio upper-factor series with b > a > 0; also
    reports whether the largest grid point approaches the lower bound to
    within sharpness_rel."""
    a, b, delta = Fraction(a), Fraction(b), Fraction(delta)
    xs = [Fraction(x) for x in x_grid]
    if not xs or any(x <= 0 for x in xs):
        raise DomainError("x grid must be nonempty and positive")
    if not b > a > 0 or delta <= 0:
        raise DomainError("need b > a > 0 and delta > 0")
    if weight_ratio_class(spec) is not MonotoneClass.DECREASING:
        raise DomainError("two-sided bound needs a decreasing weight-ratio spec")
    xs = sorted(xs)
    lower = gamma_ratio(a, delta) / gamma_ratio(b, delta)
    one = CertifiedInterval.from_fraction(Fraction(1))
    values = []
    within = []
    for x in xs:
        q = cross_ratio(spec, a, b, delta, x, tol)
        values.append(q)
        if lower.strictly_less(q) and q.strictly_less(one):
            within.append(True)
        elif q.strictly_less(lower) or one.strictly_less(q):
            within.append(False)
        else:
            within.append(None)
    top = values[-1]
    gap = abs(top.midpoint - lower.midpoint) / abs(lower.midpoint)
    approaches = float(gap) <= sharpness_rel
    if any(w is False for w in within):
        verdict = Verdict.VIOLATED
    elif any(w is None for w in within):
        verdict = Verdict.INCONCLUSIVE
    else:
        verdict = Verdict.VERIFIED
    return TwoSidedBoundReport({"a": a, "b": b, "delta": delta}, xs, values,
                               lower, Fraction(1), within, approaches,
                               float(gap), verdict)


def verify_turan(spec: HypSeriesSpec, a, delta, x_grid, tol=None) -> TwoSidedBoundReport:
    """Direct and reverse Turan-type bounds
    lower < f(a+2d,x) f(a,x) / f(a+d,x)^2 < 1: the b = a + delta
    specialization, whose lower bound for delta = 1 is a/(a+1)."""
    a, delta = Fraction(a), Fraction(delta)
    rep = verify_corollary_twosided(spec, a, a + delta, delta, x_grid, tol)
    rep.params = {"a": a, "delta": delta}
    return rep


# default parameter grids for the suite runners
GRID_SHIFTS = (Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3))
GRID_DELTAS = (Fraction(1, 2), Fraction(1), Fraction(2))
GRID_C_1F1 = (Fraction(1), Fraction(2), Fraction(3))
GRID_2F1_UPPER = ((Fraction(2), Fraction(1)), (Fraction(1), Fraction(2)))
GRID_A0_1F1 = (Fraction(1, 2), Fraction(1), Fraction(2))
GRID_2F1_LOWER = ((Fraction(1, 2), Fraction(2)), (Fraction(1), Fraction(3)))
GRID_X_POS = (Fraction(1, 4), Fraction(1), Fraction(4), Fraction(16), Fraction(50))


def _shift_pairs():
    return [(a, b) for a in GRID_SHIFTS for b in GRID_SHIFTS if b > a]


def suite_theorem1(M: int = DEFAULT_ORDER) -> list[SignReport]:
    specs = [kummer_upper(c, M) for c in GRID_C_1F1]
    specs += [gauss_upper(b, c, M) for b, c in GRID_2F1_UPPER]
    out = []
    for spec in specs:
        for a, b in _shift_pairs():
            for d in GRID_DELTAS:
                out.append(verify_theorem1(spec, a, b, d))
    return out


def suite_theorem2(M: int = 30) -> list[SignReport]:
    out = []
    for c in GRID_C_1F1:
        spec = kummer_gamma(c, M)
        for a, b in _shift_pairs():
            for d in GRID_DELTAS:
                out.append(verify_theorem2(spec, a, b, d))
    return out


def suite_theorem3(M: int = DEFAULT_ORDER) -> list[SignReport]:
    specs = [kummer_lower(a0, M) for a0 in GRID_A0_1F1]
    specs += [gauss_lower(a0, b0, M) for a0, b0 in GRID_2F1_LOWER]
    out = []
    for spec in specs:
        for a, b in _shift_pairs():
            for d in GRID_DELTAS:
                out.append(verify_theorem3(spec, a, b, d))
    return out


def suite_binomial_degeneracy(M: int = DEFAULT_ORDER) -> list[SignReport]:
    """Constant weights: the difference vanishes identically, so every
    coefficient must be exactly zero."""
    spec = binomial_upper(M)
    out = []
    for a, b in _shift_pairs():
        for d in GRID_DELTAS:
            rep = verify_theorem1(spec, a, b, d)
            if any(s is not Sign.ZERO for s in rep.per_index_sign):
                rep.verdict = Verdict.VIOLATED
                rep.reason = "constant weights must give identically zero"
            out.append(rep)
    return out


def suite_corollary(tol=None) -> list[TwoSidedBoundReport]:
    return [verify_corollary_twosided(kummer_upper(Fraction(3)),
                                      Fraction(1), Fraction(2), Fraction(1),
                                      GRID_X_POS, tol)]


def suite_turan(tol=None) -> list[TwoSidedBoundReport]:
    reps = [verify_turan(kummer_upper(Fraction(3)), Fraction(1), Fraction(1),
                         GRID_X_POS, tol)]
    reps.append(verify_turan(kummer_upper(Fraction(5)), Fraction(2), Fraction(1),
                             (Fraction(3),), tol))
    return reps
