# Admissibility of nonabelian structure data and the stratification of
# the compactified moduli space by point-bubbling levels.
#
# Run as: python demos/ideal_monopole_strata.py

from swcalc import (
    ManifoldTopology,
    expected_dim_pu2,
    spin_sp1_admissible,
    spin_u2_admissible,
    uhlenbeck_strata,
)

plane = ManifoldTopology(
    name="P2", b1=0, bplus=1, bminus=0, euler=3, signature=1,
    intersection_form=((1,),), w2=(1,),
)

# Which first Pontryagin numbers are admissible at all: p must agree
# with w2 squared mod 4, so only p = 1 mod 4 occurs on the plane.
print("Sp(1) admissible p in -8..8:",
      [p for p in range(-8, 9) if spin_sp1_admissible(plane, p)])

# With a determinant class c1 = 4h the constraint shifts to (w2 + c1)^2.
print("U(2) admissible (p, c1=4h) in -8..8:",
      [p for p in range(-8, 9) if spin_u2_admissible(plane, p, (4,))])

# The rank-2 pair with p1 = -3, c1 = 4h has a 6-dimensional moduli
# space; each bubbled point trades 6 interior dimensions for 4 in the
# configuration space, dropping the stratum dimension by 2 per level.
chi = expected_dim_pu2(plane, -3, (4,))
print(f"chi(p1=-3, c1=4h) = {chi}")
print("l\tp1\tdim")
for stratum in uhlenbeck_strata(plane, -3, (4,)):
    print(f"{stratum.level}\t{stratum.p1}\t{stratum.dim}")

# The level-1 structure has p1 = 1, where the moduli space is a single
# abelian point; its stratum pairs that point with the plane itself.
print("chi(p1=1, c1=4h) =", expected_dim_pu2(plane, 1, (4,)))
