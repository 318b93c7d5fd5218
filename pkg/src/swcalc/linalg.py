"""Exact linear algebra over the integers and rationals.

Everything here is exact: vectors and matrices carry ``int`` or
``fractions.Fraction`` entries and no floating point is ever
introduced. The routines are sized for the small lattices of
4-manifold work (second Betti numbers in the tens at most), so the
implementations favour clarity over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

from .errors import DimensionMismatchError

Scalar = int | Fraction
Vector = Sequence[Scalar]
Matrix = Sequence[Sequence[Scalar]]


def dot(x: Vector, y: Vector) -> Scalar:
    if len(x) != len(y):
        raise DimensionMismatchError(f"vector lengths differ: {len(x)} vs {len(y)}")
    return sum(a * b for a, b in zip(x, y))


def matvec(q: Matrix, x: Vector) -> list[Scalar]:
    if any(len(row) != len(x) for row in q):
        raise DimensionMismatchError(f"matrix width does not match vector length {len(x)}")
    return [dot(row, x) for row in q]


def pairing(q: Matrix, x: Vector, y: Vector) -> Scalar:
    """Bilinear pairing x^T q y."""
    return dot(x, matvec(q, y))


def quadratic(q: Matrix, x: Vector) -> Scalar:
    """Quadratic value x^T q x."""
    return pairing(q, x, x)


def determinant(q: Matrix) -> Fraction:
    """Exact determinant by fraction elimination with row pivoting."""
    n = len(q)
    a = [[Fraction(q[i][j]) for j in range(n)] for i in range(n)]
    det = Fraction(1)
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            if a[i][k]:
                f = a[i][k] / a[k][k]
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return det


def rank(q: Matrix) -> int:
    """Rank over the rationals, by exact elimination."""
    if not q:
        return 0
    rows = [[Fraction(v) for v in row] for row in q]
    n = len(rows[0])
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][col]:
                f = rows[i][col] / rows[r][col]
                rows[i] = [rows[i][j] - f * rows[r][j] for j in range(n)]
        r += 1
    return r


def _swap_symmetric(a: list[list[Fraction]], i: int, j: int) -> None:
    a[i], a[j] = a[j], a[i]
    for row in a:
        row[i], row[j] = row[j], row[i]


def _add_symmetric(a: list[list[Fraction]], k: int, j: int) -> None:
    n = len(a)
    for col in range(n):
        a[k][col] += a[j][col]
    for row in range(n):
        a[row][k] += a[row][j]


def inertia(q: Matrix) -> tuple[int, int, int]:
    """Counts (positive, negative, zero) of eigenvalue signs of a
    symmetric rational matrix.

    Computed by exact congruence diagonalization, which preserves the
    signs by Sylvester's law of inertia. No floating point is used, so
    the counts are always correct.
    """
    n = len(q)
    a = [[Fraction(q[i][j]) for j in range(n)] for i in range(n)]
    pos = neg = zero = 0
    for k in range(n):
        if a[k][k] == 0:
            j = next((i for i in range(k + 1, n) if a[i][i] != 0), None)
            if j is not None:
                _swap_symmetric(a, k, j)
            else:
                j = next((i for i in range(k + 1, n) if a[k][i] != 0), None)
                if j is None:
                    # Row k pairs to zero with the whole trailing block.
                    zero += 1
                    continue
                # Every trailing diagonal entry vanishes here, so the
                # congruence row/column addition makes a[k][k] = 2*a[k][j].
                _add_symmetric(a, k, j)
        d = a[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if a[i][k] == 0:
                continue
            f = a[i][k] / d
            for col in range(n):
                a[i][col] -= f * a[k][col]
            for row in range(n):
                a[row][i] -= f * a[row][k]
    return pos, neg, zero


def signature(q: Matrix) -> int:
    pos, neg, _ = inertia(q)
    return pos - neg


def _row_sub(a: list[list[int]], u: list[list[int]], i: int, base: int, f: int) -> None:
    a[i] = [x - f * y for x, y in zip(a[i], a[base])]
    u[i] = [x - f * y for x, y in zip(u[i], u[base])]


def integer_combination(
    rows: Sequence[Sequence[int]], target: Sequence[int]
) -> Optional[list[int]]:
    """Integer coefficients x with sum_i x[i]*rows[i] == target, or None.

    Echelonizes the rows over the integers while recording the
    unimodular transform, then reduces the target greedily against the
    pivots. Returns None when the target is not an integral combination.
    """
    k = len(rows)
    n = len(target)
    for row in rows:
        if len(row) != n:
            raise DimensionMismatchError(
                f"row length {len(row)} does not match target length {n}"
            )
    a = [[int(v) for v in row] for row in rows]
    u = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for col in range(n):
        if r == k:
            break
        nz = [i for i in range(r, k) if a[i][col] != 0]
        if not nz:
            continue
        while len(nz) > 1:
            nz.sort(key=lambda i: abs(a[i][col]))
            base = nz[0]
            for i in nz[1:]:
                f = a[i][col] // a[base][col]
                if f:
                    _row_sub(a, u, i, base, f)
            nz = [i for i in nz if a[i][col] != 0]
        base = nz[0]
        if a[base][col] < 0:
            a[base] = [-v for v in a[base]]
            u[base] = [-v for v in u[base]]
        if base != r:
            a[base], a[r] = a[r], a[base]
            u[base], u[r] = u[r], u[base]
        pivots.append((r, col))
        r += 1
    t = [int(v) for v in target]
    coeff = [0] * k
    for (ri, ci) in pivots:
        if t[ci] % a[ri][ci]:
            return None
        f = t[ci] // a[ri][ci]
        if f:
            t = [x - f * y for x, y in zip(t, a[ri])]
        coeff[ri] = f
    if any(t):
        return None
    return [sum(coeff[i] * u[i][j] for i in range(k)) for j in range(k)]


def _canon_ineq(coeffs: Sequence[Fraction], rhs: Fraction) -> tuple[tuple[int, ...], int]:
    """Scale an inequality sum(coeffs*t) <= rhs to coprime integers."""
    denoms = [c.denominator for c in coeffs] + [rhs.denominator]
    scale = lcm(*denoms) if denoms else 1
    ints = [int(c * scale) for c in coeffs]
    r = int(rhs * scale)
    g = 0
    for v in ints:
        g = gcd(g, v)
    g = gcd(g, r)
    if g > 1:
        ints = [v // g for v in ints]
        r //= g
    return tuple(ints), r


def cone_contains(generators: Sequence[Vector], target: Vector) -> bool:
    """Exact membership of target in the cone of nonnegative rational
    combinations of the generators.

    Decided by Fourier-Motzkin elimination on the feasibility system
    {t >= 0, sum_j t_j * generators[j] = target}; sound and complete
    over the rationals.
    """
    g = len(generators)
    n = len(target)
    for gen in generators:
        if len(gen) != n:
            raise DimensionMismatchError(
                f"generator length {len(gen)} does not match target length {n}"
            )
    ineqs: set[tuple[tuple[int, ...], int]] = set()
    for j in range(g):
        coeffs = [Fraction(0)] * g
        coeffs[j] = Fraction(-1)
        ineqs.add(_canon_ineq(coeffs, Fraction(0)))
    for i in range(n):
        coeffs = [Fraction(generators[j][i]) for j in range(g)]
        rhs = Fraction(target[i])
        ineqs.add(_canon_ineq(coeffs, rhs))
        ineqs.add(_canon_ineq([-c for c in coeffs], -rhs))
    for v in range(g):
        pos = [iq for iq in ineqs if iq[0][v] > 0]
        neg = [iq for iq in ineqs if iq[0][v] < 0]
        keep = {iq for iq in ineqs if iq[0][v] == 0}
        for (ap, cp) in pos:
            for (am, cm) in neg:
                coeffs = [
                    Fraction(ap[u]) * (-am[v]) + Fraction(am[u]) * ap[v]
                    for u in range(g)
                ]
                rhs = Fraction(cp) * (-am[v]) + Fraction(cm) * ap[v]
                if all(c == 0 for c in coeffs):
                    if rhs < 0:
                        return False
                    continue
                keep.add(_canon_ineq(coeffs, rhs))
        ineqs = keep
        for (coeffs_i, rhs_i) in ineqs:
            if all(c == 0 for c in coeffs_i) and rhs_i < 0:
                return False
    return all(rhs_i >= 0 for (_, rhs_i) in ineqs)
