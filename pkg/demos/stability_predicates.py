# The stability toolbox: slopes, the rank-2 oriented-pair test, the
# parameter interval, and Hilbert-polynomial semistability. All inputs
# are witness data; all arithmetic is exact rationals.
#
# Run as: python demos/stability_predicates.py

from fractions import Fraction

from swcalc import (
    HilbertPoly,
    PairProfile,
    Stability,
    framing_defect,
    oriented_pair_status_rank2,
    oriented_sheaf_semistable,
    poly_compare,
    rho_interval,
    slope,
)

# Slopes are polarized degrees over ranks, kept as exact fractions.
print("slope(deg 6, rk 2) =", slope(6, 2))
print("slope(deg -3, rk 2) =", slope(-3, 2))

# A split rank-2 bundle O(D) + (L - D) with the section cutting out D
# is a stable pair exactly when mu(O(2D)) < mu(L), equivalently when
# the divisor slope stays below the bundle slope.
deg_d, deg_l = 1, 3
status = oriented_pair_status_rank2(
    phi_zero=False,
    e_stability=Stability.NEITHER,
    mu_div=slope(deg_d, 1),
    mu_e=slope(deg_l, 2),
)
print(f"split pair with deg D = {deg_d}, deg L = {deg_l}: {status.value}")
print("check: mu(O(2D)) < mu(L)?", slope(2 * deg_d, 1) < slope(deg_l, 1))

# The parameter interval for a rank-2 pair on the plane whose bundle
# has degree 1: the bundle slope 1/2 bounds below, the degree-1
# quotient bounds above, and any parameter strictly between certifies
# stability.
interval = rho_interval(max(slope(1, 2), slope(0, 1)), slope(1, 1))
print("parameter interval:", interval)
print("rho = 3/4 certifies:", interval[0] < Fraction(3, 4) < interval[1])

# Hilbert polynomials compare by eventual dominance.
p = HilbertPoly.from_coeffs((0, 0, 1))    # n^2
q = HilbertPoly.from_coeffs((0, 100))     # 100 n
print("n^2 vs 100n:", poly_compare(p, q).value)

# A non-injective framing is measured by its defect polynomial.
p_e = HilbertPoly.from_coeffs((0, 1, 1))                 # n^2 + n
p_ker = HilbertPoly.from_coeffs((0, 0, Fraction(1, 2)))  # n^2 / 2
defect = framing_defect(p_e, 2, p_ker, 1)
print("framing defect coefficients:", defect.coeffs)

# Semistability of the oriented pair, relative to one subsheaf witness.
profile = PairProfile(
    rank=2,
    hilbert=p_e,
    phi_injective=False,
    epsilon_iso=True,
    kermax=(1, p_ker),
    subsheaves=((1, HilbertPoly.from_coeffs((1, 0, Fraction(1, 4)))),),
)
print("oriented pair semistable:", oriented_sheaf_semistable(profile))
