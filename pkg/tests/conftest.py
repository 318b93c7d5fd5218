"""Shared fixtures: canonical manifolds, randomized lattice generators,
and brute-force oracles kept independent of the code paths they check."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from swcalc import (
    ExtForm,
    KahlerFacts,
    ManifoldTopology,
    PeriodRay,
    triple_cup_from_entries,
)

P2_FILE_TEXT = """\
[manifold]
name = P2
b1 = 0
bplus = 1
bminus = 0
euler = 3
signature = 1

[intersection_form]
1

[w2]
1

[torsion]
tors2_order = 1

[kahler]
canonical_class = -3
ns_basis = 1
effective_cone = 1
pg_zero = true
kahler_ray = 1

[psc]
psc_ray = 1
"""


@pytest.fixture
def p2() -> ManifoldTopology:
    return ManifoldTopology(
        name="P2",
        b1=0,
        bplus=1,
        bminus=0,
        euler=3,
        signature=1,
        intersection_form=((1,),),
        w2=(1,),
    )


@pytest.fixture
def p2_kahler() -> KahlerFacts:
    return KahlerFacts(
        canonical_class=(-3,),
        ns_basis=((1,),),
        effective_cone=((Fraction(1),),),
        pg_zero=True,
        kahler_ray=PeriodRay((Fraction(1),)),
    )


@pytest.fixture
def p2_ray() -> PeriodRay:
    return PeriodRay((Fraction(1),))


@pytest.fixture
def s2xs2() -> ManifoldTopology:
    return ManifoldTopology(
        name="S2xS2",
        b1=0,
        bplus=1,
        bminus=1,
        euler=4,
        signature=0,
        intersection_form=((0, 1), (1, 0)),
        w2=(0, 0),
    )


@pytest.fixture
def t2xs2() -> ManifoldTopology:
    # b1 = 2 with one hyperbolic pair in H^2 and cup number
    # <a_1 u a_2 u e_1, [X]> = 1; the shape of the product of a torus
    # and a sphere.
    return ManifoldTopology(
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


@pytest.fixture
def p2_file(tmp_path):
    path = tmp_path / "p2.manifold"
    path.write_text(P2_FILE_TEXT, encoding="utf-8")
    return path


def random_block_topology(
    rng: random.Random, max_size: int = 10, b1: int = 0, name: str = "random"
) -> ManifoldTopology:
    """Random block-diagonal unimodular form built from diagonal +-1
    entries and hyperbolic 2x2 blocks, with the forced w2 reduction."""
    target = rng.randint(1, max_size)
    blocks: list[list[list[int]]] = []
    w2: list[int] = []
    pos = neg = size = 0
    while size < target:
        kind = rng.choice(("plus", "minus", "hyperbolic"))
        if kind == "hyperbolic":
            if size + 2 > target:
                continue
            blocks.append([[0, 1], [1, 0]])
            w2.extend([0, 0])
            pos += 1
            neg += 1
            size += 2
        elif kind == "plus":
            blocks.append([[1]])
            w2.append(1)
            pos += 1
            size += 1
        else:
            blocks.append([[-1]])
            w2.append(1)
            neg += 1
            size += 1
    q = [[0] * size for _ in range(size)]
    offset = 0
    for block in blocks:
        for i, row in enumerate(block):
            for j, value in enumerate(row):
                q[offset + i][offset + j] = value
        offset += len(block)
    return ManifoldTopology(
        name=name,
        b1=b1,
        bplus=pos,
        bminus=neg,
        euler=2 - 2 * b1 + size,
        signature=pos - neg,
        intersection_form=tuple(tuple(row) for row in q),
        w2=tuple(w2),
    )


def random_characteristic(
    rng: random.Random, m: ManifoldTopology, lo: int = -5, hi: int = 5
) -> tuple[int, ...]:
    out = []
    for w in m.w2:
        values = [v for v in range(lo, hi + 1) if (v - w) % 2 == 0]
        out.append(rng.choice(values))
    return tuple(out)


def random_sparse_form(
    rng: random.Random,
    b1: int,
    degree: int | None = None,
    max_terms: int = 4,
    coeff_bound: int = 5,
) -> ExtForm:
    coeffs = {}
    for _ in range(rng.randint(0, max_terms)):
        r = degree if degree is not None else rng.randint(0, b1)
        key = tuple(sorted(rng.sample(range(1, b1 + 1), r))) if r else ()
        value = rng.randint(-coeff_bound, coeff_bound)
        coeffs[key] = coeffs.get(key, 0) + value
    return ExtForm(b1, coeffs)


def oracle_wedge(x: ExtForm, y: ExtForm) -> ExtForm:
    """Brute-force exterior product: concatenate index tuples and count
    bubble-sort swaps for the sign. Independent of the library's
    inversion-count implementation."""
    out: dict[tuple[int, ...], int] = {}
    for ka, va in x.coeffs.items():
        for kb, vb in y.coeffs.items():
            merged = list(ka) + list(kb)
            if len(set(merged)) != len(merged):
                continue
            arr = merged[:]
            swaps = 0
            for i in range(len(arr)):
                for j in range(len(arr) - 1):
                    if arr[j] > arr[j + 1]:
                        arr[j], arr[j + 1] = arr[j + 1], arr[j]
                        swaps += 1
            sign = -1 if swaps % 2 else 1
            key = tuple(arr)
            out[key] = out.get(key, 0) + sign * va * vb
    return ExtForm(x.b1, out)
