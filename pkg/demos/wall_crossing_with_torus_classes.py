# Wall crossing with nontrivial first homology: on a torus-times-sphere
# shaped manifold the jump is a functional on multivectors, driven by
# the halved triple-cup form.
#
# Run as: python demos/wall_crossing_with_torus_classes.py

from swcalc import (
    ExtForm,
    ManifoldTopology,
    OrientationData,
    cup_form,
    expected_dim_abelian,
    triple_cup_from_entries,
    wall_crossing_delta,
    wedge,
)

# b1 = 2 with a hyperbolic H^2 and cup number <a1 u a2 u e1> = 1.
torus_sphere = ManifoldTopology(
    name="T2xS2",
    b1=2,
    bplus=1,
    bminus=1,
    euler=0,
    signature=0,
    intersection_form=((0, 1), (1, 0)),
    w2=(0, 0),
    triple_cup=triple_cup_from_entries(2, 2, [(1, 2, 1, 1)]),
)

# Multivectors multiply with shuffle signs.
a1 = ExtForm.term(2, (1,))
a2 = ExtForm.term(2, (2,))
print("a1 ^ a2 =", wedge(a1, a2))
print("a2 ^ a1 =", wedge(a2, a1))

# The degree-2 form attached to c halves the cup pairing; for
# c = (2k, 0) its only coefficient is k.
for k in (1, 2, 5):
    c = (2 * k, 0)
    print(f"cup form for c = {c}:", cup_form(torus_sphere, c))

# On the scalar test form the jump picks up the full cup form with a
# sign from the divided-power expansion: the value is -k here.
for k in (1, 2, 5):
    c = (2 * k, 0)
    w = expected_dim_abelian(torus_sphere, c)
    jump = wall_crossing_delta(torus_sphere, c, ExtForm.scalar(2, 1))
    print(f"c = {c}: w = {w}, scalar jump = {jump}")

# Reversing the orientation of H^1 negates every value.
flipped = OrientationData(o1_sign=-1)
print("flipped orientation jump for c = (2, 0):",
      wall_crossing_delta(torus_sphere, (2, 0), ExtForm.scalar(2, 1), flipped))

# Degrees above min(b1, w) vanish: the top-degree test form sees zero.
print("top-degree jump for c = (4, 0):",
      wall_crossing_delta(torus_sphere, (4, 0), ExtForm.term(2, (1, 2))))
