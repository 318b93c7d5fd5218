"""Exact linear algebra helpers against hand-checked and classical cases."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from swcalc.errors import DimensionMismatchError
from swcalc.linalg import (
    cone_contains,
    determinant,
    inertia,
    integer_combination,
    pairing,
    quadratic,
    rank,
)

# The E8 lattice matrix: even, unimodular, positive definite.
E8 = (
    (2, -1, 0, 0, 0, 0, 0, 0),
    (-1, 2, -1, 0, 0, 0, 0, 0),
    (0, -1, 2, -1, 0, 0, 0, 0),
    (0, 0, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, -1),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, 0),
    (0, 0, 0, 0, -1, 0, 0, 2),
)

HYPERBOLIC = ((0, 1), (1, 0))


def test_determinant_basics():
    assert determinant(()) == 1
    assert determinant(((5,),)) == 5
    assert determinant(HYPERBOLIC) == -1
    assert determinant(E8) == 1
    assert determinant(((1, 2), (2, 4))) == 0


def test_inertia_diagonal_and_hyperbolic():
    assert inertia(((1,),)) == (1, 0, 0)
    assert inertia(((-1,),)) == (0, 1, 0)
    assert inertia(HYPERBOLIC) == (1, 1, 0)
    assert inertia(E8) == (8, 0, 0)
    neg_e8 = tuple(tuple(-v for v in row) for row in E8)
    assert inertia(neg_e8) == (0, 8, 0)
    assert inertia(((0, 0), (0, 0))) == (0, 0, 2)
    assert inertia(((1, 1), (1, 1))) == (1, 0, 1)


def test_inertia_matches_eigen_signs_on_random_symmetric():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 5)
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                a[i][j] = a[j][i] = rng.randint(-3, 3)
        pos, neg, zero = inertia(a)
        assert pos + neg + zero == n
        # Rank from elimination must agree with the nonzero count.
        assert rank(a) == pos + neg


def test_pairing_and_quadratic():
    assert pairing(HYPERBOLIC, (1, 0), (0, 1)) == 1
    assert quadratic(HYPERBOLIC, (1, 1)) == 2
    assert quadratic(((1,),), (3,)) == 9
    with pytest.raises(DimensionMismatchError):
        pairing(HYPERBOLIC, (1,), (0, 1))


def test_integer_combination_solves_and_rejects():
    rows = ((2, 0), (0, 3))
    assert integer_combination(rows, (4, -3)) == [2, -1]
    assert integer_combination(rows, (1, 0)) is None
    assert integer_combination(((1, 1), (0, 2)), (1, 3)) == [1, 1]
    assert integer_combination((), (0, 0)) == []
    assert integer_combination((), (1, 0)) is None
    # Dependent rows still span correctly.
    assert integer_combination(((1, 2), (2, 4)), (3, 6)) is not None


def test_integer_combination_random_roundtrip():
    rng = random.Random(11)
    for _ in range(100):
        k = rng.randint(1, 4)
        n = rng.randint(1, 4)
        rows = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(k)]
        coeffs = [rng.randint(-3, 3) for _ in range(k)]
        target = [sum(coeffs[i] * rows[i][j] for i in range(k)) for j in range(n)]
        found = integer_combination(rows, target)
        assert found is not None
        rebuilt = [sum(found[i] * rows[i][j] for i in range(k)) for j in range(n)]
        assert rebuilt == target


def test_cone_contains_basics():
    gens = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
    assert cone_contains(gens, (Fraction(3), Fraction(2)))
    assert not cone_contains(gens, (Fraction(-1), Fraction(0)))
    assert cone_contains(gens, (Fraction(0), Fraction(0)))
    # One generator spans a ray only.
    ray = ((Fraction(1), Fraction(2)),)
    assert cone_contains(ray, (Fraction(2), Fraction(4)))
    assert not cone_contains(ray, (Fraction(2), Fraction(3)))
    assert not cone_contains((), (Fraction(1),))
    assert cone_contains((), (Fraction(0),))


def test_cone_contains_interior_combination():
    gens = (
        (Fraction(1), Fraction(0), Fraction(1)),
        (Fraction(0), Fraction(1), Fraction(1)),
        (Fraction(1), Fraction(1), Fraction(0)),
    )
    target = tuple(
        Fraction(1) * g[0] + Fraction(1, 2) * g[1] + Fraction(3, 2) * g[2]
        for g in zip(*gens)
    )
    assert cone_contains(gens, target)


def test_cone_contains_random_memberships():
    rng = random.Random(23)
    for _ in range(60):
        g = rng.randint(1, 4)
        n = rng.randint(1, 3)
        gens = [
            tuple(Fraction(rng.randint(-3, 3)) for _ in range(n)) for _ in range(g)
        ]
        weights = [Fraction(rng.randint(0, 5), rng.randint(1, 3)) for _ in range(g)]
        target = tuple(
            sum((w * gen[i] for w, gen in zip(weights, gens)), Fraction(0))
            for i in range(n)
        )
        assert cone_contains(gens, target)
