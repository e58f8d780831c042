"""
Scanning the conjectured monotone cross-ratio
=============================================

Whether Q(x) = F(b+delta,x)F(a,x)/[F(a+delta,x)F(b,x)] is monotone in x
is open; this script gathers numerical evidence, it proves nothing.
Every plotted value is still a certified enclosure, so a monotonicity
violation reported here would be a genuine counterexample, not noise.
"""

from fractions import Fraction as F

from turankit import StepKind, default_log_grid, explore_conjecture

# Positive branch: b > a > 0, expected to fall from 1 toward the
# Gamma-quotient bound A as x -> infinity.
a, b, delta, c = F(1), F(2), F(1), F(3)
xs = default_log_grid(24, x_max=F(50))
rep = explore_conjecture(a, b, delta, c, xs)

print(f"positive branch, a={a} b={b} delta={delta} c={c}")
print(f"bound A = {rep.bound.exact}  ({len(xs)} log-spaced points)\n")
print("x          Q(x)        step")
for i, (x, q) in enumerate(zip(rep.xs, rep.values)):
    step = "" if i == 0 else rep.steps[i - 1].value
    print(f"{float(x):<10.4f} {float(q.midpoint):.8f}  {step}")

down = sum(1 for s in rep.steps if s is StepKind.DOWN)
print(f"\ncertified decreasing steps: {down}/{len(rep.steps)}, "
      f"violations: {rep.violations}, undecided: {rep.undecided}")
print(f"gap to 1 at the left end: {rep.gap_to_one:.2e}")
print(f"gap to A at the right end: {rep.gap_to_bound:.2e}")

# Negative branch: a < b < c - delta, expected to rise toward 1 from
# the mirrored bound B as x -> 0-.
nrep = explore_conjecture(F(1), F(2), F(1), F(4),
                          default_log_grid(12, F(30), negative=True))
ups = sum(1 for s in nrep.steps if s is StepKind.UP)
print(f"\nnegative branch (c=4): bound B = {nrep.bound.exact}, "
      f"{ups}/{len(nrep.steps)} certified increasing steps, "
      f"violations: {nrep.violations}")
