"""Dimension formulas, admissibility sets, and the validation report."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from swcalc import (
    DimensionMismatchError,
    DomainError,
    ManifoldTopology,
    c2_spinor_bundle,
    characteristic_range,
    expected_dim_abelian,
    expected_dim_pu2,
    is_characteristic,
    spin_sp1_admissible,
    spin_u2_admissible,
    spinc_count_per_chern,
    spinor_sup_bound,
    uhlenbeck_strata,
    validate_topology,
)
from swcalc.linalg import quadratic

from conftest import random_block_topology, random_characteristic


def test_validate_p2_is_clean(p2):
    assert validate_topology(p2) == []


def test_validate_catches_euler_identity(p2):
    bad = ManifoldTopology(
        name="P2", b1=0, bplus=1, bminus=0, euler=4, signature=1,
        intersection_form=((1,),), w2=(1,),
    )
    violations = validate_topology(bad)
    assert any("euler" in v for v in violations)


def test_validate_catches_non_unimodular():
    bad = ManifoldTopology(
        name="bad", b1=0, bplus=1, bminus=0, euler=3, signature=1,
        intersection_form=((2,),), w2=(0,),
    )
    violations = validate_topology(bad)
    assert any("unimodular" in v for v in violations)


def test_validate_catches_signature_and_w2(s2xs2):
    bad = ManifoldTopology(
        name="bad", b1=0, bplus=2, bminus=0, euler=4, signature=2,
        intersection_form=((0, 1), (1, 0)), w2=(1, 0),
    )
    violations = validate_topology(bad)
    assert any("eigenvalues" in v for v in violations)
    assert any("signature" in v for v in violations)
    assert any("characteristic" in v for v in violations)
    assert validate_topology(s2xs2) == []


def test_validate_catches_cup_antisymmetry():
    cup = (((1, 0), (1, 0)), ((1, 0), (0, 0)))
    bad = ManifoldTopology(
        name="bad", b1=2, bplus=1, bminus=1, euler=0, signature=0,
        intersection_form=((0, 1), (1, 0)), w2=(0, 0), triple_cup=cup,
    )
    assert any("antisymmetric" in v for v in validate_topology(bad))


def test_is_characteristic_examples(p2, s2xs2):
    assert is_characteristic(p2, (3,))
    assert not is_characteristic(p2, (2,))
    assert is_characteristic(s2xs2, (2, 4))
    with pytest.raises(DimensionMismatchError):
        is_characteristic(p2, (1, 1))


def test_expected_dim_abelian_p2(p2):
    assert expected_dim_abelian(p2, (3,)) == 0
    assert expected_dim_abelian(p2, (1,)) == -2
    # Direct evaluation of (49 - 9)/4; the Kahler module cross-checks
    # this against twice the dimension of the degree-2 linear system.
    assert expected_dim_abelian(p2, (7,)) == 10
    with pytest.raises(DomainError):
        expected_dim_abelian(p2, (2,))


def test_c2_spinor_bundle_examples(p2):
    assert c2_spinor_bundle(p2, (3,), +1) == 0
    assert c2_spinor_bundle(p2, (3,), -1) == 3
    with pytest.raises(DomainError):
        c2_spinor_bundle(p2, (3,), 2)


def test_c2_difference_is_minus_euler():
    rng = random.Random(5)
    for _ in range(40):
        m = random_block_topology(rng, max_size=6)
        c = random_characteristic(rng, m)
        assert c2_spinor_bundle(m, c, +1) - c2_spinor_bundle(m, c, -1) == -m.euler


def test_spinc_count_reads_torsion(p2, s2xs2):
    assert spinc_count_per_chern(p2) == 1
    two = ManifoldTopology(
        name="t2", b1=0, bplus=1, bminus=1, euler=4, signature=0,
        intersection_form=s2xs2.intersection_form, w2=(0, 0), tors2_order=2,
    )
    assert spinc_count_per_chern(two) == 2
    four = ManifoldTopology(
        name="t4", b1=0, bplus=1, bminus=1, euler=4, signature=0,
        intersection_form=s2xs2.intersection_form, w2=(0, 0), tors2_order=4,
    )
    assert spinc_count_per_chern(four) == 4


def test_spin_sp1_admissible(p2, s2xs2):
    assert spin_sp1_admissible(p2, 1)
    assert not spin_sp1_admissible(p2, 2)
    assert spin_sp1_admissible(s2xs2, -8)
    assert spin_sp1_admissible(p2, -3)  # -3 == 1 (mod 4)


def test_spin_u2_admissible(p2, s2xs2):
    assert spin_u2_admissible(p2, -3, (4,))
    assert not spin_u2_admissible(p2, -2, (4,))
    assert spin_u2_admissible(s2xs2, 0, (0, 0))
    with pytest.raises(DimensionMismatchError):
        spin_u2_admissible(p2, 0, (0, 0))


def test_spin_u2_admissible_invariant_under_even_shift():
    rng = random.Random(13)
    for _ in range(60):
        m = random_block_topology(rng, max_size=6)
        c = [rng.randint(-4, 4) for _ in range(m.b2)]
        lifted = [w + v for w, v in zip(m.w2, c)]
        p = quadratic(m.intersection_form, lifted) + 4 * rng.randint(-3, 3)
        shift = [v + 2 * rng.randint(-2, 2) for v in c]
        assert spin_u2_admissible(m, p, c)
        assert spin_u2_admissible(m, p, shift)


def test_expected_dim_pu2_examples(p2):
    assert expected_dim_pu2(p2, -3, (4,)) == 6
    assert expected_dim_pu2(p2, 1, (4,)) == 0
    with pytest.raises(DomainError):
        expected_dim_pu2(p2, -2, (4,))


def test_expected_dim_pu2_shift_by_four():
    rng = random.Random(17)
    for _ in range(40):
        m = random_block_topology(rng, max_size=6)
        c1 = [rng.randint(-4, 4) for _ in range(m.b2)]
        lifted = [w + v for w, v in zip(m.w2, c1)]
        p1 = quadratic(m.intersection_form, lifted) - 4 * rng.randint(0, 3)
        assert expected_dim_pu2(m, p1 + 4, c1) == expected_dim_pu2(m, p1, c1) - 6


def test_uhlenbeck_strata_plantiko(p2):
    assert uhlenbeck_strata(p2, -3, (4,)) == [(0, -3, 6), (1, 1, 4), (2, 5, 2), (3, 9, 0)]


def test_uhlenbeck_strata_empty_and_capped(p2):
    # chi = -8 here, so there is no stratum of nonnegative dimension.
    assert uhlenbeck_strata(p2, 1, (0,)) == []
    assert uhlenbeck_strata(p2, -3, (4,), max_level=1) == [(0, -3, 6), (1, 1, 4)]


def test_uhlenbeck_strata_recurrence(p2):
    strata = uhlenbeck_strata(p2, -3, (4,))
    for a, b in zip(strata, strata[1:]):
        assert b.p1 - a.p1 == 4
        assert b.dim - a.dim == -2


def test_spinor_sup_bound():
    assert spinor_sup_bound(-5) == 0
    assert spinor_sup_bound(0) == 0
    assert spinor_sup_bound(Fraction(7, 2)) == Fraction(7, 2)


def test_van_der_blij_small_suite():
    rng = random.Random(29)
    for _ in range(200):
        m = random_block_topology(rng)
        c = random_characteristic(rng, m)
        assert (quadratic(m.intersection_form, c) - m.signature) % 8 == 0


def test_dim_parity_small_suite():
    rng = random.Random(31)
    for _ in range(200):
        m = random_block_topology(rng, b1=rng.randint(0, 3))
        c = random_characteristic(rng, m)
        num = Fraction(
            quadratic(m.intersection_form, c) - 3 * m.signature - 2 * m.euler, 4
        )
        assert num.denominator == 1
        w = expected_dim_abelian(m, c)
        assert w == num
        assert (w - (1 + m.b1 + m.bplus)) % 2 == 0


def test_characteristic_range(p2, s2xs2):
    assert characteristic_range(p2, -3, 3) == [(-3,), (-1,), (1,), (3,)]
    values = characteristic_range(s2xs2, -2, 2)
    assert (0, 0) in values and (-2, 2) in values
    assert all(is_characteristic(s2xs2, c) for c in values)
    with pytest.raises(DomainError):
        characteristic_range(s2xs2, -2, 2, limit=3)


def _k3_like() -> ManifoldTopology:
    # Two negative-definite E8 blocks plus three hyperbolic planes: the
    # even unimodular lattice of signature -16 in rank 22.
    e8 = [
        [2, -1, 0, 0, 0, 0, 0, 0],
        [-1, 2, -1, 0, 0, 0, 0, 0],
        [0, -1, 2, -1, 0, 0, 0, 0],
        [0, 0, -1, 2, -1, 0, 0, 0],
        [0, 0, 0, -1, 2, -1, 0, -1],
        [0, 0, 0, 0, -1, 2, -1, 0],
        [0, 0, 0, 0, 0, -1, 2, 0],
        [0, 0, 0, 0, -1, 0, 0, 2],
    ]
    n = 22
    q = [[0] * n for _ in range(n)]
    for block_start in (0, 8):
        for i in range(8):
            for j in range(8):
                q[block_start + i][block_start + j] = -e8[i][j]
    for pair_start in (16, 18, 20):
        q[pair_start][pair_start + 1] = 1
        q[pair_start + 1][pair_start] = 1
    return ManifoldTopology(
        name="K3", b1=0, bplus=3, bminus=19, euler=24, signature=-16,
        intersection_form=tuple(tuple(row) for row in q), w2=(0,) * n,
    )


def test_k3_lattice_validates_and_has_zero_dimensional_core():
    k3 = _k3_like()
    assert validate_topology(k3) == []
    # The trivial class is characteristic on the even lattice, with a
    # zero-dimensional expected moduli space.
    zero = (0,) * 22
    assert is_characteristic(k3, zero)
    assert expected_dim_abelian(k3, zero) == 0
    assert c2_spinor_bundle(k3, zero, +1) == 0
    assert c2_spinor_bundle(k3, zero, -1) == 24
    assert spin_sp1_admissible(k3, -4)
    assert not spin_sp1_admissible(k3, 2)


def test_construction_rejects_malformed_shapes():
    with pytest.raises(ValueError):
        ManifoldTopology(
            name="bad", b1=0, bplus=1, bminus=0, euler=3, signature=1,
            intersection_form=((1, 0),), w2=(1,),
        )
    with pytest.raises(ValueError):
        ManifoldTopology(
            name="bad", b1=0, bplus=1, bminus=0, euler=3, signature=1,
            intersection_form=((1,),), w2=(2,),
        )
    with pytest.raises(ValueError):
        ManifoldTopology(
            name="bad", b1=0, bplus=1, bminus=0, euler=3, signature=1,
            intersection_form=((1,),), w2=(1,), tors2_order=0,
        )
