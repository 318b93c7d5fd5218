"""Invariant tables from geometric facts: positive-scalar-curvature
vanishing, the Kahler p_g = 0 rule through effective-cone membership,
and the abelian vortex solvability inequality.

The geometric inputs are bundled in :class:`KahlerFacts`: the canonical
class, an integral basis of the Neron-Severi lattice, a finite rational
generator list for the effective cone (so membership is decidable by
exact feasibility), the p_g = 0 flag and the Kahler period ray.

Two independent pipelines can fill a table of invariant pairs on a
manifold with b1 = 0 and bplus = 1: vanishing for a positive scalar
curvature metric combined with the wall-crossing jump, or the Douady
nonemptiness rule for Kahler surfaces with p_g = 0. When both are
available they must agree, and the table builder checks that they do.
Entries the supplied facts cannot decide are reported as undetermined,
never guessed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .chambers import OrientationData, PeriodRay, require_positive_square
from .errors import DimensionMismatchError, DomainError, InvalidTopologyError
from .extalg import ExtForm, wall_crossing_delta
from .linalg import Scalar, cone_contains, integer_combination, pairing, quadratic, rank
from .topology import (
    IntVector,
    ManifoldTopology,
    expected_dim_abelian,
    require_characteristic,
)


class SolvabilitySide(enum.Enum):
    """Which Douady space the abelian vortex moduli are identified with."""

    DOU_M = "dou_m"
    DOU_K_MINUS_M = "dou_K_minus_m"
    ON_WALL = "on_wall"


@dataclass(frozen=True)
class KahlerFacts:
    """Complex-geometric facts about a Kahler surface underlying the
    p_g = 0 invariant rule.

    ``effective_cone`` generators are given in coordinates with respect
    to ``ns_basis``; the effective classes are exactly the nonnegative
    rational combinations of the generators that are integral in the
    Neron-Severi lattice. Surfaces whose effective cone is not finitely
    generated are out of reach of this representation.
    """

    canonical_class: IntVector
    ns_basis: tuple[IntVector, ...]
    effective_cone: tuple[tuple[Fraction, ...], ...]
    pg_zero: bool
    kahler_ray: PeriodRay

    def __post_init__(self):
        object.__setattr__(
            self, "canonical_class", tuple(int(v) for v in self.canonical_class)
        )
        object.__setattr__(
            self, "ns_basis", tuple(tuple(int(v) for v in row) for row in self.ns_basis)
        )
        object.__setattr__(
            self,
            "effective_cone",
            tuple(tuple(Fraction(v) for v in gen) for gen in self.effective_cone),
        )


def validate_kahler_facts(m: ManifoldTopology, facts: KahlerFacts) -> list[str]:
    """Report every violated invariant of the Kahler facts, empty iff valid."""
    violations = []
    if len(facts.canonical_class) != m.b2:
        violations.append(
            f"canonical class has length {len(facts.canonical_class)}, "
            f"expected b2 = {m.b2}"
        )
        return violations
    if any((k - w) % 2 for k, w in zip(facts.canonical_class, m.w2)):
        violations.append("canonical class is not characteristic (K != w2 mod 2)")
    if any(len(row) != m.b2 for row in facts.ns_basis):
        violations.append("every ns_basis row must have length b2")
        return violations
    if facts.ns_basis and rank(facts.ns_basis) != len(facts.ns_basis):
        violations.append("ns_basis rows are linearly dependent; a basis is required")
    if any(len(gen) != len(facts.ns_basis) for gen in facts.effective_cone):
        violations.append(
            "effective cone generators must be given in ns_basis coordinates "
            f"(length {len(facts.ns_basis)})"
        )
    if len(facts.kahler_ray.h) != m.b2:
        violations.append(f"kahler_ray has length {len(facts.kahler_ray.h)}, expected {m.b2}")
    elif quadratic(m.intersection_form, facts.kahler_ray.h) <= 0:
        violations.append("kahler_ray must have positive square")
    if facts.kahler_ray.component_sign != 1:
        violations.append(
            "kahler_ray must designate the component containing Kahler classes "
            "(component_sign = +1)"
        )
    return violations


def _require_valid_facts(m: ManifoldTopology, facts: KahlerFacts) -> None:
    violations = validate_kahler_facts(m, facts)
    if violations:
        raise DomainError("invalid Kahler facts: " + "; ".join(violations))


def abelian_solvability_side(
    m: ManifoldTopology,
    facts: KahlerFacts,
    line_class: Sequence[int],
    b: Sequence[Scalar],
) -> SolvabilitySide:
    """Which branch of the vortex solvability dichotomy (2m - K - b) . h
    selects for the twisted abelian equations on a Kahler surface.

    Negative pairing identifies the moduli space with the Douady space
    of the line class itself, positive pairing with that of K minus the
    class; a vanishing pairing sits on the wall, where the dichotomy is
    silent. On the positive branch the identification reverses complex
    orientations by the parity of the holomorphic Euler characteristic
    of the line bundle; that twist is a statement about orientations
    only and is not applied to any value computed here.
    """
    _require_valid_facts(m, facts)
    if len(line_class) != m.b2 or len(b) != m.b2:
        raise DimensionMismatchError("line class and twisting class must have length b2")
    diff = [
        Fraction(2 * mv - kv) - Fraction(bv)
        for mv, kv, bv in zip(line_class, facts.canonical_class, b)
    ]
    s = pairing(m.intersection_form, diff, facts.kahler_ray.h)
    if s < 0:
        return SolvabilitySide.DOU_M
    if s > 0:
        return SolvabilitySide.DOU_K_MINUS_M
    return SolvabilitySide.ON_WALL


def douady_nonempty(
    m: ManifoldTopology, facts: KahlerFacts, line_class: Sequence[int]
) -> bool:
    """Whether an effective divisor with the given class exists.

    True iff the class is an integral combination of the Neron-Severi
    basis and, in those coordinates, a nonnegative rational combination
    of the effective cone generators. Both checks are exact; classes
    outside the Neron-Severi lattice give an empty moduli space.
    """
    _require_valid_facts(m, facts)
    if len(line_class) != m.b2:
        raise DimensionMismatchError(
            f"line class has length {len(line_class)}, expected b2 = {m.b2}"
        )
    coords = integer_combination(facts.ns_basis, [int(v) for v in line_class])
    if coords is None:
        return False
    return cone_contains(facts.effective_cone, coords)


def sw_pg0_invariants(
    m: ManifoldTopology, facts: KahlerFacts, line_class: Sequence[int]
) -> tuple[int, int]:
    """The invariant pair for the class 2m - K on a Kahler surface with
    p_g = 0 and b1 = 0, oriented by the component containing Kahler
    classes.

    Negative expected dimension forces (0, 0). Otherwise the pair is
    (1, 0) when the Douady space of the line class is nonempty and
    (0, -1) when it is empty.
    """
    if m.b1 != 0:
        raise DomainError(f"the p_g = 0 rule requires b1 = 0, got {m.b1}")
    if m.bplus != 1:
        raise DomainError(f"the p_g = 0 rule requires bplus = 1, got {m.bplus}")
    _require_valid_facts(m, facts)
    if not facts.pg_zero:
        raise DomainError("the invariant rule applies only when p_g = 0")
    if len(line_class) != m.b2:
        raise DimensionMismatchError(
            f"line class has length {len(line_class)}, expected b2 = {m.b2}"
        )
    c = tuple(2 * mv - kv for mv, kv in zip(line_class, facts.canonical_class))
    w = expected_dim_abelian(m, c)
    if w < 0:
        return (0, 0)
    if douady_nonempty(m, facts, line_class):
        return (1, 0)
    return (0, -1)


@dataclass(frozen=True)
class SWRow:
    """One table row: the characteristic element and the invariant pair.

    ``None`` renders as "undetermined": the supplied facts cannot decide
    the value (for instance on a wall), and the table never extrapolates.
    """

    c: IntVector
    sw_plus: Optional[int]
    sw_minus: Optional[int]


def _sign(x: Scalar) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def _psc_pair(
    m: ManifoldTopology, c: IntVector, psc_ray: PeriodRay, w: int, delta: int
) -> tuple[Optional[int], Optional[int]]:
    # A positive-scalar-curvature metric has empty untwisted moduli, so
    # the invariant computed in the chamber containing (ray, 0) is 0 and
    # the opposite chamber follows from the wall-crossing jump.
    if w < 0:
        return (0, 0)
    s = psc_ray.component_sign * _sign(pairing(m.intersection_form, c, psc_ray.h))
    if s == 0:
        return (None, None)
    if s > 0:
        return (delta, 0)
    return (0, -delta)


def _kahler_pair(
    m: ManifoldTopology, facts: KahlerFacts, c: IntVector
) -> tuple[Optional[int], Optional[int]]:
    half = [(cv + kv) for cv, kv in zip(c, facts.canonical_class)]
    if any(v % 2 for v in half):
        raise InvalidTopologyError(
            f"c + K is not divisible by 2 for c = {list(c)}; "
            "characteristic data is inconsistent"
        )
    line_class = tuple(v // 2 for v in half)
    return sw_pg0_invariants(m, facts, line_class)


def _merge_pairs(
    c: IntVector,
    pairs: list[tuple[Optional[int], Optional[int]]],
) -> tuple[Optional[int], Optional[int]]:
    plus: Optional[int] = None
    minus: Optional[int] = None
    for (p, q) in pairs:
        if p is not None:
            if plus is not None and plus != p:
                raise DomainError(
                    f"the PSC and Kahler pipelines disagree at c = {list(c)}: "
                    f"SW+ = {plus} vs {p}; the supplied facts are inconsistent"
                )
            plus = p
        if q is not None:
            if minus is not None and minus != q:
                raise DomainError(
                    f"the PSC and Kahler pipelines disagree at c = {list(c)}: "
                    f"SW- = {minus} vs {q}; the supplied facts are inconsistent"
                )
            minus = q
    return plus, minus


def sw_table(
    m: ManifoldTopology,
    c_list: Sequence[Sequence[int]],
    psc_ray: Optional[PeriodRay] = None,
    kahler_facts: Optional[KahlerFacts] = None,
) -> list[SWRow]:
    """Invariant pairs for each characteristic element, for b1 = 0 and
    bplus = 1, from the supplied geometric facts.

    Three arguments fill a row: negative expected dimension forces
    (0, 0); a positive-scalar-curvature ray zeroes the chamber
    containing (ray, 0) and the wall-crossing jump fills the other; the
    p_g = 0 Douady rule decides both values at once. Rows are emitted in
    lexicographically sorted c order (they are independent, so a caller
    may well compute them concurrently, but the output order is fixed),
    and every determined row is checked against the wall-crossing jump.
    """
    if m.b1 != 0:
        raise DomainError(f"the table synthesis requires b1 = 0, got {m.b1}")
    if m.bplus != 1:
        raise DomainError(f"the table synthesis requires bplus = 1, got {m.bplus}")
    if psc_ray is None and kahler_facts is None:
        raise DomainError(
            "insufficient facts: supply a positive-scalar-curvature period ray "
            "or Kahler facts"
        )
    if psc_ray is not None:
        if len(psc_ray.h) != m.b2:
            raise DimensionMismatchError(
                f"psc ray has length {len(psc_ray.h)}, expected b2 = {m.b2}"
            )
        require_positive_square(m, psc_ray)
    if kahler_facts is not None:
        _require_valid_facts(m, kahler_facts)
    if psc_ray is not None and kahler_facts is not None:
        # Both pipelines must use the same hyperbola component: two rays
        # designate the same one iff their component-signed pairing is
        # positive (it cannot vanish when bplus = 1).
        agree = (
            psc_ray.component_sign
            * kahler_facts.kahler_ray.component_sign
            * _sign(pairing(m.intersection_form, psc_ray.h, kahler_facts.kahler_ray.h))
        )
        if agree < 0:
            raise DomainError(
                "the PSC ray and the Kahler ray designate different hyperbola "
                "components; the two pipelines would use different orientation data"
            )
    rows = []
    for c in sorted(set(tuple(int(v) for v in c) for c in c_list)):
        c = require_characteristic(m, c)
        w = expected_dim_abelian(m, c)
        delta = wall_crossing_delta(m, c, ExtForm.scalar(0, 1), OrientationData())
        pairs = []
        if psc_ray is not None:
            pairs.append(_psc_pair(m, c, psc_ray, w, delta))
        if kahler_facts is not None:
            pairs.append(_kahler_pair(m, kahler_facts, c))
        plus, minus = _merge_pairs(c, pairs)
        if plus is not None and minus is not None and plus - minus != delta:
            raise InvalidTopologyError(
                f"table row at c = {list(c)} violates the wall-crossing "
                f"identity: SW+ - SW- = {plus - minus}, jump = {delta}"
            )
        rows.append(SWRow(c, plus, minus))
    return rows
