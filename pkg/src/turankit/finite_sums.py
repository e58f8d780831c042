"""Exact terminating hypergeometric sums at argument -1.

A terminating sum here is a pFq whose designated upper parameter is a
negative integer -m, evaluated at x = -1: exactly m + 1 rational terms.
Two parameter shapes are built symbolically from user inputs (never
accepted raw, to avoid transcription slips in the intricate patterns):

* the 4F3 whose sign encodes the order of a and b,

      4F3(-m, a, 1-c-m, 1-am/(a+b); c, 1-b-m, -am/(a+b) | -1),

  which is proportional, by an exactly known factor, to the m-th
  coefficient of 1F1(a+1;c;x) 1F1(b;c;x) - 1F1(b+1;c;x) 1F1(a;c;x);

* its 2q+2 F 2q+1 generalization whose positivity holds for
  alpha > beta > 0 under the truncated symmetric-polynomial chain on
  (a_1..a_{q-1}; b_1..b_q).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, PoleError
from .exact import is_nonpositive_integer, poch_table
from .lemmas import truncated_chain_holds
from .series import kummer_upper, phi_coefficients


@dataclass(frozen=True)
class TerminatingSum:
    """pFq parameter lists with designated terminator -m, argument fixed
    at -1.  Validation guarantees the sum has exactly m + 1 well-defined
    rational terms."""

    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    m: int

    def __post_init__(self):
        up = tuple(Fraction(u) for u in self.upper)
        lo = tuple(Fraction(l) for l in self.lower)
        object.__setattr__(self, "upper", up)
        object.__setattr__(self, "lower", lo)
        if self.m < 0:
            raise DomainError(f"terminator order must be >= 0, got {self.m}")
        if Fraction(-self.m) not in up:
            raise DomainError(f"no upper parameter equals -{self.m}")
        # pole screening first: a degenerate 0/0 shape trips both checks
        # and must surface as a pole
        for l in lo:
            if l.denominator == 1 and 1 - self.m <= l <= 0:
                raise PoleError(
                    f"lower parameter {l} hits a pole within the first "
                    f"{self.m + 1} terms")
        for u in up:
            if u.denominator == 1 and -self.m < u <= 0:
                raise DomainError(
                    f"upper parameter {u} terminates the sum before index {self.m}")


def eval_terminating(ts: TerminatingSum) -> Fraction:
    """Exact value of the m+1-term sum at -1."""
    total = Fraction(0)
    term = Fraction(1)
    for k in range(ts.m + 1):
        total += term
        if k == ts.m:
            break
        num = Fraction(1)
        for u in ts.upper:
            num *= u + k
        den = Fraction(k + 1)
        for l in ts.lower:
            den *= l + k
        term = term * num / den * -1
    return total


def thm4d_sum(a, b, c, m: int) -> TerminatingSum:
    """The 4F3(-1) whose sign matches sign(a - b); needs a, b, c > 0 and
    am/(a+b) not an integer below m (pole screening)."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a <= 0 or b <= 0 or c <= 0:
        raise DomainError("parameters must be positive")
    if m < 2:
        raise DomainError(f"need m >= 2, got {m}")
    t = a * m / (a + b)
    return TerminatingSum(
        upper=(Fraction(-m), a, 1 - c - m, 1 - t),
        lower=(c, 1 - b - m, -t),
        m=m,
    )


def link_factor(b, c, m: int) -> Fraction:
    """Frozen proportionality constant between the 4F3(-1) value and the
    m-th product-difference coefficient:

        phi_m = -m (b+1)_{m-1} / (m! (c)_m) * 4F3(-1).

    Derived by rewriting the coefficient's convolution with the index
    identities  (m-k)! = (-1)^k m!/(-m)_k,
    (c)_{m-k} = (-1)^k (c)_m/(1-c-m)_k  and the factorization
    (a+1)_k (b)_{m-k} - (a)_k (b+1)_{m-k} =
        -m (b+1)_{m-1} (-1)^k (a)_k (1-am/(a+b))_k /
        [(1-b-m)_k (-am/(a+b))_k]."""
    b, c = Fraction(b), Fraction(c)
    return Fraction(-m) * poch_table(b + 1, m - 1)[m - 1] / (
        math.factorial(m) * poch_table(c, m)[m])


@dataclass
class Link4F3Report:
    a: Fraction
    b: Fraction
    c: Fraction
    m: int
    phi_m: Fraction
    sum_value: Fraction
    factor: Fraction
    sign_matches_a_minus_b: bool


def check_4f3_coefficient_link(a, b, c, m: int) -> Link4F3Report:
    """Exact cross-validation: the product-difference coefficient phi_m
    (shift step 1) equals link_factor * 4F3(-1).  Mismatch means a real
    arithmetic bug, so it raises instead of reporting."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    value = eval_terminating(thm4d_sum(a, b, c, m))
    phi_m = phi_coefficients(kummer_upper(c, order=m), a, b, 1)[m]
    factor = link_factor(b, c, m)
    if phi_m != factor * value:
        raise ArithmeticError(
            f"proportionality failed at (a={a}, b={b}, c={c}, m={m}): "
            f"phi_m={phi_m}, factor*sum={factor * value}")
    want = (a - b).numerator
    got = value.numerator
    sign_ok = (want > 0) == (got > 0) and (want < 0) == (got < 0) and (
        (want == 0) == (got == 0))
    return Link4F3Report(a, b, c, m, phi_m, value, factor, sign_ok)


def qfq_sum(alpha, beta, a_list, b_list, m: int) -> TerminatingSum:
    """The 2q+2 F 2q+1 terminating shape; q = len(b_list),
    len(a_list) = q - 1.  Reduces to the thm4d shape at q = 1."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    av = tuple(Fraction(v) for v in a_list)
    bv = tuple(Fraction(v) for v in b_list)
    q = len(bv)
    if q < 1:
        raise DomainError("need at least one lower-list parameter")
    if len(av) != q - 1:
        raise DomainError(f"expected {q - 1} upper-list parameters, got {len(av)}")
    if alpha <= 0 or beta <= 0 or any(v <= 0 for v in av + bv):
        raise DomainError("parameters must be positive")
    if m < 2:
        raise DomainError(f"need m >= 2, got {m}")
    t = alpha * m / (alpha + beta)
    upper = (Fraction(-m), alpha) + av + tuple(1 - bi - m for bi in bv) + (1 - t,)
    lower = bv + tuple(1 - ai - m for ai in av) + (1 - beta - m, -t)
    return TerminatingSum(upper, lower, m)


class QfqVerdict(enum.Enum):
    POSITIVE = "positive"
    NONPOSITIVE = "nonpositive"
    SKIPPED_HYPOTHESIS = "skipped-hypothesis"


@dataclass
class QfqResult:
    value: Fraction
    verdict: QfqVerdict
    chain_holds: bool


def eval_qfq_sum(alpha, beta, a_list, b_list, m: int) -> QfqResult:
    """Exact value plus verdict; tuples failing the symmetric-chain
    screening are marked skipped rather than judged.  alpha > beta is a
    hard precondition of the shape itself."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    if not alpha > beta > 0:
        raise DomainError(f"need alpha > beta > 0, got {alpha}, {beta}")
    value = eval_terminating(qfq_sum(alpha, beta, a_list, b_list, m))
    chain_ok = truncated_chain_holds(a_list, b_list)
    if not chain_ok:
        verdict = QfqVerdict.SKIPPED_HYPOTHESIS
    elif value > 0:
        verdict = QfqVerdict.POSITIVE
    else:
        verdict = QfqVerdict.NONPOSITIVE
    return QfqResult(value, verdict, chain_ok)
