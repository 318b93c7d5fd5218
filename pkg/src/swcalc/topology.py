"""Topological input data for closed oriented 4-manifolds, with the
closed-form dimension and admissibility arithmetic built on it.

The central type is :class:`ManifoldTopology`: the intersection lattice
on H^2/Tors in a fixed basis e_1..e_b2 together with Betti data, a
mod-2 coordinate vector for the second Stiefel-Whitney class, the order
of the 2-torsion subgroup of H^2, and the triple cup-product tensor
against a fixed basis a_1..a_b1 of H^1/Tors. Characteristic elements
(integral lifts of w_2) are plain integer tuples validated by
:func:`is_characteristic` / :func:`require_characteristic`.

All arithmetic is exact. Quantities that are integral for consistent
input, such as the expected dimension of the abelian monopole moduli
space, are integrality-checked; a failure raises
:class:`InvalidTopologyError`, signaling contradictory input data
rather than a rounding problem.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import DimensionMismatchError, DomainError, InvalidTopologyError
from .linalg import Scalar, determinant, inertia, quadratic

IntVector = tuple[int, ...]
CupTensor = tuple[tuple[tuple[int, ...], ...], ...]


def _as_int_vector(values: Iterable, what: str) -> IntVector:
    out = []
    for v in values:
        if not isinstance(v, int):
            raise ValueError(f"{what} entries must be integers, got {v!r}")
        out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class ManifoldTopology:
    """Topological invariants of a closed oriented 4-manifold.

    Fields describe H^2(X,Z)/Tors in a fixed basis: ``intersection_form``
    is the symmetric unimodular pairing matrix, ``w2`` the mod-2
    coordinates of an integral lift of the second Stiefel-Whitney class,
    ``tors2_order`` the order of the 2-torsion subgroup of H^2(X,Z), and
    ``triple_cup[i][j][k]`` the cup number <a_i u a_j u e_k, [X]> for a
    fixed basis a_1..a_b1 of H^1/Tors.

    Construction only enforces shape consistency; the semantic
    invariants (unimodularity, signature decomposition, the Euler
    identity, antisymmetry of the cup tensor, w2 being characteristic)
    are checked by :func:`validate_topology`, which reports every
    violation instead of raising.

    Instances are immutable and safe to share across threads.
    """

    name: str
    b1: int
    bplus: int
    bminus: int
    euler: int
    signature: int
    intersection_form: tuple[IntVector, ...]
    w2: IntVector
    tors2_order: int = 1
    triple_cup: CupTensor = ()

    def __post_init__(self):
        q = tuple(_as_int_vector(row, "intersection form") for row in self.intersection_form)
        object.__setattr__(self, "intersection_form", q)
        n = len(q)
        if any(len(row) != n for row in q):
            raise ValueError("intersection form must be a square matrix")
        if min(self.b1, self.bplus, self.bminus) < 0:
            raise ValueError("Betti numbers must be nonnegative")
        if self.tors2_order < 1:
            raise ValueError("tors2_order must be a positive integer")
        w2 = _as_int_vector(self.w2, "w2")
        if len(w2) != n:
            raise ValueError(f"w2 has length {len(w2)}, expected b2 = {n}")
        if any(v not in (0, 1) for v in w2):
            raise ValueError("w2 entries must be 0 or 1")
        object.__setattr__(self, "w2", w2)
        cup = self.triple_cup
        if not cup:
            zero_row = tuple([0] * n)
            cup = tuple(tuple(zero_row for _ in range(self.b1)) for _ in range(self.b1))
        else:
            cup = tuple(
                tuple(_as_int_vector(v, "triple cup tensor") for v in plane) for plane in cup
            )
        if len(cup) != self.b1 or any(len(plane) != self.b1 for plane in cup):
            raise ValueError("triple cup tensor must have shape b1 x b1 x b2")
        if any(len(v) != n for plane in cup for v in plane):
            raise ValueError("triple cup tensor must have shape b1 x b1 x b2")
        object.__setattr__(self, "triple_cup", cup)

    @property
    def b2(self) -> int:
        return len(self.intersection_form)


def triple_cup_from_entries(
    b1: int, b2: int, entries: Iterable[tuple[int, int, int, int]]
) -> CupTensor:
    """Build the cup tensor from sparse 1-based entries (i, j, k, value).

    The antisymmetric counterpart T[j][i][k] = -value is filled in
    automatically; conflicting duplicates raise ValueError.
    """
    t = [[[0] * b2 for _ in range(b1)] for _ in range(b1)]
    seen: set[tuple[int, int, int]] = set()
    for (i, j, k, v) in entries:
        if not (1 <= i <= b1 and 1 <= j <= b1 and 1 <= k <= b2):
            raise ValueError(f"triple cup index ({i},{j},{k}) out of range")
        if i == j and v != 0:
            raise ValueError(f"triple cup entry ({i},{i},{k}) must vanish by antisymmetry")
        if (i, j, k) in seen or (j, i, k) in seen:
            raise ValueError(f"duplicate triple cup entry for ({i},{j},{k})")
        seen.add((i, j, k))
        t[i - 1][j - 1][k - 1] = v
        if i != j:
            t[j - 1][i - 1][k - 1] = -v
    return tuple(tuple(tuple(row) for row in plane) for plane in t)


def validate_topology(m: ManifoldTopology) -> list[str]:
    """Return every violated invariant of the data set, empty iff valid.

    Each entry names the violated identity and a witness. The checks are
    purely arithmetic (exact determinant and congruence-diagonalization
    signature); no realizability question is decided.
    """
    violations: list[str] = []
    q = m.intersection_form
    n = m.b2
    if m.bplus + m.bminus != n:
        violations.append(
            f"bplus + bminus = {m.bplus + m.bminus} does not match the "
            f"intersection form size b2 = {n}"
        )
    symmetric = True
    for i in range(n):
        for j in range(i + 1, n):
            if q[i][j] != q[j][i]:
                symmetric = False
                violations.append(
                    f"intersection form not symmetric at ({i + 1},{j + 1}): "
                    f"{q[i][j]} vs {q[j][i]}"
                )
                break
        if not symmetric:
            break
    det = determinant(q)
    if abs(det) != 1:
        violations.append(f"intersection form not unimodular: det = {det}")
    if symmetric:
        pos, neg, zero = inertia(q)
        if (pos, neg) != (m.bplus, m.bminus):
            violations.append(
                f"intersection form has {pos} positive and {neg} negative "
                f"eigenvalues, expected bplus = {m.bplus}, bminus = {m.bminus}"
            )
        if pos - neg != m.signature:
            violations.append(
                f"signature field {m.signature} does not equal the computed "
                f"signature {pos - neg}"
            )
    expected_euler = 2 - 2 * m.b1 + n
    if m.euler != expected_euler:
        violations.append(
            f"euler = {m.euler} violates euler = 2 - 2*b1 + b2 = {expected_euler}"
        )
    for i in range(m.b1):
        for j in range(m.b1):
            for k in range(n):
                if m.triple_cup[i][j][k] != -m.triple_cup[j][i][k]:
                    violations.append(
                        f"triple cup tensor not antisymmetric at "
                        f"({i + 1},{j + 1},{k + 1})"
                    )
                    return violations + _characteristic_violations(m)
    violations.extend(_characteristic_violations(m))
    return violations


def _characteristic_violations(m: ManifoldTopology) -> list[str]:
    # x^T Q x == w2^T Q x (mod 2) for all x reduces to the basis vectors,
    # since squares agree with first powers mod 2.
    q = m.intersection_form
    out = []
    for i in range(m.b2):
        if (q[i][i] - sum(m.w2[j] * q[j][i] for j in range(m.b2))) % 2:
            out.append(
                "w2 is not characteristic: x^T Q x != w2^T Q x (mod 2) "
                f"for x = e_{i + 1}"
            )
    return out


def is_characteristic(m: ManifoldTopology, c: Sequence[int]) -> bool:
    """True iff c is an integral lift of w2, i.e. c == w2 (mod 2)."""
    if len(c) != m.b2:
        raise DimensionMismatchError(
            f"characteristic vector has length {len(c)}, expected b2 = {m.b2}"
        )
    return all((ci - wi) % 2 == 0 for ci, wi in zip(c, m.w2))


def require_characteristic(m: ManifoldTopology, c: Sequence[int]) -> IntVector:
    """Validate c as a characteristic element and return it as a tuple.

    Besides the mod-2 parity, the van der Blij congruence
    c^2 == signature (mod 8) is checked; it holds automatically on any
    unimodular lattice, so a failure exposes inconsistent input data.
    """
    c = tuple(int(v) for v in c)
    if not is_characteristic(m, c):
        raise DomainError(f"c = {list(c)} is not characteristic: c != w2 (mod 2)")
    if (quadratic(m.intersection_form, c) - m.signature) % 8:
        raise InvalidTopologyError(
            f"characteristic vector c = {list(c)} violates "
            "c^2 == signature (mod 8); the lattice data is inconsistent"
        )
    return c


def expected_dim_abelian(m: ManifoldTopology, c: Sequence[int]) -> int:
    """Expected dimension of the abelian monopole moduli space,
    (c^2 - 3*signature - 2*euler) / 4.

    The value depends only on c and the characteristic numbers of the
    manifold. Integrality is checked exactly; failure means the input
    data is inconsistent.
    """
    c = require_characteristic(m, c)
    num = quadratic(m.intersection_form, c) - 3 * m.signature - 2 * m.euler
    if num % 4:
        raise InvalidTopologyError(
            f"(c^2 - 3*signature - 2*euler) = {num} is not divisible by 4; "
            "the topology data is inconsistent"
        )
    return num // 4


def c2_spinor_bundle(m: ManifoldTopology, c: Sequence[int], sign: int) -> int:
    """Second Chern number of a half-spinor bundle for Chern class c:
    (c^2 - 3*signature - 2*euler)/4 for the positive bundle (sign=+1) and
    (c^2 - 3*signature + 2*euler)/4 for the negative one (sign=-1).
    """
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign!r}")
    c = require_characteristic(m, c)
    num = quadratic(m.intersection_form, c) - 3 * m.signature - 2 * sign * m.euler
    if num % 4:
        raise InvalidTopologyError(
            f"spinor bundle c2 numerator {num} is not divisible by 4; "
            "the topology data is inconsistent"
        )
    return num // 4


def spinc_count_per_chern(m: ManifoldTopology) -> int:
    """Number of Spin^c classes sharing a single Chern class.

    The classes with fixed Chern class form a torsor under the 2-torsion
    subgroup of H^2(X,Z), so the count is its order.
    """
    return m.tors2_order


def spin_sp1_admissible(m: ManifoldTopology, p: int) -> bool:
    """Whether p occurs as first Pontryagin number of a Spin^Sp(1)
    structure: p == w2^2 (mod 4) for any integral lift of w2.

    Well defined because (w + 2x)^2 == w^2 (mod 4) for every integer x.
    """
    return (p - quadratic(m.intersection_form, m.w2)) % 4 == 0


def spin_u2_admissible(m: ManifoldTopology, p: int, c: Sequence[int]) -> bool:
    """Whether (p, c) occurs for a Spin^U(2) structure:
    p == (w2 + c)^2 (mod 4) for any integral lift of w2."""
    if len(c) != m.b2:
        raise DimensionMismatchError(
            f"c has length {len(c)}, expected b2 = {m.b2}"
        )
    lifted = [w + v for w, v in zip(m.w2, c)]
    return (p - quadratic(m.intersection_form, lifted)) % 4 == 0


def expected_dim_pu2(m: ManifoldTopology, p1: int, c1: Sequence[int]) -> int:
    """Expected dimension of the PU(2) monopole moduli space,
    (-3*p1 + c1^2)/2 - (3*euler + 4*signature)/2.

    Requires (p1, c1) to be Spin^U(2)-admissible; the total expression
    is then an integer, which is checked exactly.
    """
    if not spin_u2_admissible(m, p1, c1):
        raise DomainError(
            f"(p1, c1) = ({p1}, {list(c1)}) is not Spin^U(2)-admissible: "
            "p1 must equal (w2 + c1)^2 (mod 4)"
        )
    num = -3 * p1 + quadratic(m.intersection_form, c1) - (3 * m.euler + 4 * m.signature)
    if num % 2:
        raise InvalidTopologyError(
            f"PU(2) index numerator {num} is odd; the topology data is inconsistent"
        )
    return num // 2


class UhlenbeckStratum(NamedTuple):
    """One stratum of the ideal-monopole compactification."""

    level: int
    p1: int
    dim: int


def uhlenbeck_strata(
    m: ManifoldTopology, p1: int, c1: Sequence[int], max_level: Optional[int] = None
) -> list[UhlenbeckStratum]:
    """Enumerate ideal-monopole strata (l, p1 + 4l, chi - 2l).

    Level l pairs monopoles for the shifted structure, whose first
    Pontryagin number grows by 4l and whose expected dimension drops by
    6l, with unordered l-point configurations contributing 4l
    dimensions; the stratum dimension is therefore chi - 2l. Levels are
    listed while the stratum dimension stays nonnegative, additionally
    capped at max_level when given.
    """
    chi = expected_dim_pu2(m, p1, c1)
    strata = []
    level = 0
    while chi - 2 * level >= 0 and (max_level is None or level <= max_level):
        strata.append(UhlenbeckStratum(level, p1 + 4 * level, chi - 2 * level))
        level += 1
    return strata


def spinor_sup_bound(sup_term: Scalar) -> Fraction:
    """A priori sup bound for the squared spinor component:
    max(0, sup_term) for the caller-computed curvature/scalar term."""
    s = Fraction(sup_term)
    return s if s > 0 else Fraction(0)


def characteristic_range(
    m: ManifoldTopology, cmin: int, cmax: int, limit: int = 200_000
) -> list[IntVector]:
    """All characteristic vectors with every coordinate in [cmin, cmax],
    in lexicographic order.

    Works coordinatewise: entry i runs over the values of the correct
    parity w2[i] in the box. Raises DomainError when the enumeration
    would exceed ``limit`` vectors.
    """
    per_coord: list[list[int]] = []
    for w in m.w2:
        vals = [v for v in range(cmin, cmax + 1) if (v - w) % 2 == 0]
        per_coord.append(vals)
    count = 1
    for vals in per_coord:
        count *= len(vals)
        if count > limit:
            raise DomainError(
                f"characteristic range would enumerate more than {limit} vectors"
            )
    return [tuple(c) for c in itertools.product(*per_coord)]
