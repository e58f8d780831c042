"""
Chain conditions and monotone polynomial ratios
===============================================

When is A(x)/B(x) monotone for polynomials with positive coefficients?
A sufficient condition: the coefficient ratios a_k/b_k form a monotone
chain.  The wronskian A'B - B'A then has coefficients of one sign.  At
degrees 1 and 2 the condition is also necessary, which an exhaustive
search certifies by exhibiting a negative point for every violator.
"""

from fractions import Fraction as F

from turankit import (ChainKind, PositivePolynomial, RatioMonotonicity,
                      check_ratio_chain, check_symmetric_chain,
                      elementary_symmetric, necessity_witness,
                      ratio_R_monotone, truncated_chain_holds,
                      wronskian_coeffs)

# a_k/b_k = 1/2, 1, 2: increasing chain, so A/B increases on (0, inf).
A = PositivePolynomial([F(1), F(2), F(4)])
B = PositivePolynomial([F(2), F(2), F(2)])
rep = check_ratio_chain(A, B)
ratios = [ak / bk for ak, bk in zip(A.coeffs, B.coeffs)]
print("ratios:", [str(r) for r in ratios], "->", rep.kind.value)
w = wronskian_coeffs(A, B)
print("wronskian coefficients:", [str(c) for c in w])
assert all(c >= 0 for c in w)

# Break the chain and the wronskian picks up a negative coefficient.
C = PositivePolynomial([F(1), F(4), F(2)])
print("\nbroken chain:", check_ratio_chain(C, B).kind.value,
      "-> wronskian", [str(c) for c in wronskian_coeffs(C, B)])

# Exhaustive necessity at degree 1: every chain-violating pair over the
# grid {1/2, 1, 2, 3} admits a certified negative point of A'B - B'A.
witnesses = necessity_witness(1)
print(f"\ndegree-1 violators with certified witnesses: {len(witnesses)}")
ex = witnesses[0]
print(f"example: A={ex.a_coeffs} B={ex.b_coeffs} -> "
      f"(A'B - B'A)({ex.x}) = {ex.value} < 0")

# For parameter lists the chain runs over elementary symmetric
# polynomials e_m instead of raw coefficients.
avals, bvals = [F(1), F(3)], [F(2), F(2)]
print("\ne_m(a) =", [str(v) for v in elementary_symmetric(avals)])
print("e_m(b) =", [str(v) for v in elementary_symmetric(bvals)])
srep = check_symmetric_chain(avals, bvals)
print("symmetric chain kind:", srep.kind.value)

# The induced rational function R(x) = prod(1+a_i x)/prod(1+b_i x)
# inherits the monotonicity.
print("R monotone:", ratio_R_monotone(avals, bvals).value)

# The truncated variant feeds the terminating-sum positivity screen;
# for q = 2 it reduces to the classical a1 >= b1 b2/(b1+b2) test.
print("\ntruncated chain, a=(1,), b=(1,2):",
      truncated_chain_holds([F(1)], [F(1), F(2)]))
print("truncated chain, a=(1/4,), b=(1,2):",
      truncated_chain_holds([F(1, 4)], [F(1), F(2)]))
assert ratio_R_monotone(avals, bvals) is not RatioMonotonicity.UNDETERMINED
assert check_ratio_chain(A, B).kind is ChainKind.INCREASING_CHAIN
