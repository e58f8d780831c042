"""
Exact terminating sums at argument -1
=====================================

A negative-integer upper parameter cuts a hypergeometric series down to
finitely many terms, so the value is an exact rational.  Two families
are evaluated here: a 4F3 shape whose sign tracks the order of two
shift parameters, and its 2q+2 F 2q+1 generalization whose positivity
is screened by an elementary-symmetric chain condition.
"""

from fractions import Fraction as F

from turankit import (PoleError, QfqVerdict, check_4f3_coefficient_link,
                      eval_qfq_sum, eval_terminating, link_factor,
                      qfq_sum, thm4d_sum)

# The 4F3 shape built from (a, b, c, m); all the awkward parameters
# like 1 - c - m and -am/(a+b) are assembled internally.
a, b, c, m = F(2), F(1), F(1), 2
ts = thm4d_sum(a, b, c, m)
print("upper parameters:", [str(u) for u in ts.upper])
print("lower parameters:", [str(v) for v in ts.lower])
value = eval_terminating(ts)
print(f"4F3(-1) value: {value}   sign matches a - b = {a - b}\n")

# Swapping a and b flips the sign exactly.
print("swapped value:", eval_terminating(thm4d_sum(b, a, c, m)), "\n")

# The same number shows up, up to an explicit rational factor, as a
# product-difference coefficient of the confluent family with weights
# 1/(c)_n.  The link is checked in exact arithmetic; a mismatch would
# raise, not report.
rep = check_4f3_coefficient_link(a, b, c, m)
print(f"coefficient link: phi_{m} = {rep.phi_m} = "
      f"({rep.factor}) * ({rep.sum_value})")
print("frozen factor -m (b+1)_(m-1) / (m! (c)_m) =", link_factor(b, c, m))

# The generalization replaces the single (b, 1-b-m) pair with q pairs
# plus q-1 mirrored upper parameters.  Positivity needs the truncated
# chain condition on the two parameter lists; failing tuples are
# skipped as hypothesis violations, never judged.
print("\nq=2 sweep at alpha=3, beta=1:")
for m in (2, 3, 4, 5):
    try:
        res = eval_qfq_sum(F(3), F(1), [F(2)], [F(1), F(2)], m)
    except PoleError as exc:
        print(f"  m={m}: pole ({exc})")
        continue
    print(f"  m={m}: value={res.value}  verdict={res.verdict.value}")
    assert res.verdict is QfqVerdict.POSITIVE

# A tuple that fails the chain screening: a1 below b1 b2/(b1+b2).
res = eval_qfq_sum(F(3), F(1), [F(1, 4)], [F(1), F(2)], 3)
print("\nchain-violating tuple -> verdict:", res.verdict.value)

# Reversing the summation order reproduces the identical rational, a
# cheap self-check that exactness is real.
ts5 = qfq_sum(F(3), F(1), [F(2)], [F(1), F(2)], 5)
forward = eval_terminating(ts5)
print("\nm=5 value (exact):", forward)
