"""
Certified series evaluation and classical transformations
=========================================================

Series values here are enclosures: an exact rational partial sum plus a
rigorous geometric tail bound, wrapped in outward-rounded interval
arithmetic.  Strict inequalities decided on such enclosures are proofs,
not floating-point impressions.
"""

from fractions import Fraction as F

from turankit import (PFQSpec, check_euler_pfaff, check_kummer_transform,
                      eval_1f1, eval_pfq, get_precision, working_precision)

# 1F1(1;1;1) is e; the enclosure must contain it.
res = eval_pfq(PFQSpec((F(1),), (F(1),)), F(1))
print(f"1F1(1;1;1) in [{float(res.value.lo):.15f}, "
      f"{float(res.value.hi):.15f}]")
print(f"terms used: {res.terms_used}, tail bound included: "
      f"{res.conclusive}\n")

# A terminating case is summed exactly: no tail, width zero.
res = eval_pfq(PFQSpec((F(-3), F(2)), (F(4),)), F(7))
print("terminating 2F1(-3,2;4;7) =", res.value.exact)

# Negative arguments route through the exponential-shift transform when
# that improves conditioning (avoids catastrophic alternating terms).
neg = eval_1f1(F(2), F(3), F(-20))
print(f"1F1(2;3;-20) enclosure width: "
      f"{float(neg.value.hi - neg.value.lo):.2e}\n")

# The transform itself is checked by evaluating both sides separately:
# the intervals must overlap and the midpoints must agree closely.
rep = check_kummer_transform(F(1), F(2), F(1, 2))
print(f"exponential-shift identity at (1, 2, 1/2): overlap={rep.overlap} "
      f"residual={rep.residual:.2e}")

# The Gauss-type function has four classical representations (direct,
# one full argument flip, two one-parameter flips); all evaluable
# branches must agree.  At |x| < 1/2 all four are in range.
erep = check_euler_pfaff(F(1, 2), F(1), F(2), F(1, 4))
print(f"argument-flip identities at (1/2, 1, 2, 1/4): "
      f"branches={sorted(erep.values)} max residual={erep.max_residual:.2e}")

# -log(1-x)/x has a closed form to compare against: 2F1(1,1;2;1/2)
# equals 2 log 2.
dilog = eval_pfq(PFQSpec((F(1), F(1)), (F(2),)), F(1, 2))
print(f"2F1(1,1;2;1/2) = {float(dilog.value.midpoint):.12f} "
      f"(2 ln 2 = 1.386294361120)\n")

# Precision is a context: tighten it locally without disturbing the
# ambient setting.
print("ambient precision:", get_precision(), "digits")
with working_precision(60):
    wide = eval_pfq(PFQSpec((F(1),), (F(1),)), F(1))
    print(f"at 60 digits the enclosure width shrinks to "
          f"{float(wide.value.hi - wide.value.lo):.2e}")
print("restored precision:", get_precision(), "digits")
