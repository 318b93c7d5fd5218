"""Command line interface: file ingestion, command dispatch, and
deterministic report emission.

Exit codes: 0 success, 2 domain error (violated precondition or invalid
data), 3 parse error. Output is byte-identical across runs on the same
input: no timestamps, no locale dependence, rationals rendered reduced
as p/q with positive denominator. Vectors on the command line are
comma-separated integers or rationals in the fixed H^2 basis; use the
``--option=value`` spelling when a vector starts with a minus sign.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .chambers import PeriodRay, classify_chamber_oriented, is_c_good
from .errors import DomainError, ManifoldFileError
from .kahler import sw_table, validate_kahler_facts
from .linalg import quadratic
from .manifoldfile import ManifoldData, emit_manifold_text, load_manifold_file
from .stability import (
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
from .topology import (
    characteristic_range,
    expected_dim_abelian,
    expected_dim_pu2,
    uhlenbeck_strata,
    validate_topology,
)


def _parse_int_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part.strip()) for part in text.split(","))
    except ValueError:
        raise DomainError(f"expected a comma-separated integer vector, got {text!r}")


def _parse_fraction_vector(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"expected a comma-separated rational vector, got {text!r}")


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"expected a rational p/q, got {text!r}")


def _parse_poly(text: str) -> HilbertPoly:
    return HilbertPoly.from_coeffs(_parse_fraction_vector(text))


def _parse_ranked_poly(text: str) -> tuple[int, HilbertPoly]:
    rank_part, sep, coeff_part = text.partition(":")
    if not sep:
        raise DomainError(f"expected 'rank:c0,c1,...', got {text!r}")
    try:
        rank = int(rank_part.strip())
    except ValueError:
        raise DomainError(f"expected an integer rank in {text!r}")
    return rank, _parse_poly(coeff_part)


def _fmt(value) -> str:
    if value is None:
        return "undetermined"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, tuple):
        return ",".join(_fmt(v) for v in value)
    return str(value)


def _json_value(value):
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, tuple):
        return ",".join(_fmt(v) for v in value)
    return str(value)


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def _load(path) -> ManifoldData:
    data = load_manifold_file(path)
    violations = validate_topology(data.topology)
    if violations:
        raise DomainError("manifold data failed validation: " + "; ".join(violations))
    return data


def cmd_validate(args) -> int:
    data = load_manifold_file(args.file)
    violations = validate_topology(data.topology)
    if data.kahler is not None:
        violations.extend(validate_kahler_facts(data.topology, data.kahler))
    if data.psc_ray is not None:
        if len(data.psc_ray.h) != data.topology.b2:
            violations.append("psc_ray length does not match b2")
        elif quadratic(data.topology.intersection_form, data.psc_ray.h) <= 0:
            violations.append("psc_ray must have positive square")
    ok = not violations
    if ok and args.echo:
        sys.stdout.write(emit_manifold_text(data))
        return 0
    payload = {
        "command": "validate",
        "name": data.topology.name,
        "ok": ok,
        "violations": violations,
    }
    if ok:
        lines = [f"ok: {data.topology.name}: all invariants satisfied"]
    else:
        lines = [f"violation: {v}" for v in violations]
    _emit(args, payload, lines)
    return 0 if ok else 2


def cmd_dim(args) -> int:
    data = _load(args.file)
    m = data.topology
    if args.pu2:
        if args.p1 is None or args.c1 is None:
            raise DomainError("--pu2 needs both --p1 and --c1")
        c1 = _parse_int_vector(args.c1)
        chi = expected_dim_pu2(m, args.p1, c1)
        _emit(
            args,
            {"command": "dim", "p1": args.p1, "c1": _json_value(c1), "chi": chi},
            [f"p1 = {args.p1}", f"c1 = {_fmt(c1)}", f"chi = {chi}"],
        )
    else:
        if args.c is None:
            raise DomainError("supply --c for the abelian dimension or --pu2")
        c = _parse_int_vector(args.c)
        w = expected_dim_abelian(m, c)
        _emit(
            args,
            {"command": "dim", "c": _json_value(c), "w_c": w},
            [f"c = {_fmt(c)}", f"w_c = {w}"],
        )
    return 0


def cmd_sw_table(args) -> int:
    data = _load(args.file)
    m = data.topology
    if data.psc_ray is None and data.kahler is None:
        raise DomainError(
            "the manifold file provides neither a [psc] nor a [kahler] section"
        )
    c_list = characteristic_range(m, args.cmin, args.cmax)
    rows = sw_table(m, c_list, psc_ray=data.psc_ray, kahler_facts=data.kahler)
    payload_rows = [
        {
            "c": _json_value(row.c),
            "sw_plus": row.sw_plus,
            "sw_minus": row.sw_minus,
        }
        for row in rows
    ]
    lines = ["c\tsw_plus\tsw_minus"]
    lines.extend(
        f"{_fmt(row.c)}\t{_fmt(row.sw_plus)}\t{_fmt(row.sw_minus)}" for row in rows
    )
    _emit(args, {"command": "sw_table", "rows": payload_rows}, lines)
    return 0


def cmd_strata(args) -> int:
    data = _load(args.file)
    c1 = _parse_int_vector(args.c1)
    strata = uhlenbeck_strata(data.topology, args.p1, c1, args.max_level)
    payload = {
        "command": "strata",
        "rows": [{"l": s.level, "p1": s.p1, "dim": s.dim} for s in strata],
    }
    lines = ["l\tp1\tdim"]
    lines.extend(f"{s.level}\t{s.p1}\t{s.dim}" for s in strata)
    _emit(args, payload, lines)
    return 0


def cmd_chamber(args) -> int:
    data = _load(args.file)
    m = data.topology
    c = _parse_int_vector(args.c)
    h = _parse_fraction_vector(args.h)
    b = (
        _parse_fraction_vector(args.b)
        if args.b is not None
        else tuple(Fraction(0) for _ in range(m.b2))
    )
    if args.component_sign not in (1, -1):
        raise DomainError("--component-sign must be 1 or -1")
    ray = PeriodRay(h, args.component_sign)
    chamber = classify_chamber_oriented(m, c, ray, b)
    good = is_c_good(m, c, ray, b)
    _emit(
        args,
        {"command": "chamber", "chamber": chamber.value, "c_good": good},
        [f"chamber = {chamber.value}", f"c_good = {_fmt(good)}"],
    )
    return 0


def cmd_stability_slope(args) -> int:
    value = slope(_parse_fraction(args.degree), args.rank)
    _emit(args, {"command": "slope", "slope": _json_value(value)}, [f"slope = {value}"])
    return 0


def cmd_stability_pair(args) -> int:
    phi_zero = args.phi == "zero"
    mu_div = _parse_fraction(args.mu_div) if args.mu_div is not None else None
    status = oriented_pair_status_rank2(
        phi_zero, Stability(args.e_stability), mu_div, _parse_fraction(args.mu_e)
    )
    _emit(
        args,
        {"command": "pair_rank2", "status": status.value},
        [f"status = {status.value}"],
    )
    return 0


def cmd_stability_rho(args) -> int:
    interval = rho_interval(_parse_fraction(args.m_under), _parse_fraction(args.m_over))
    if interval is None:
        _emit(args, {"command": "rho_interval", "interval": None}, ["interval = empty"])
    else:
        lo, hi = interval
        _emit(
            args,
            {"command": "rho_interval", "interval": [str(lo), str(hi)]},
            [f"interval = ({lo}, {hi})"],
        )
    return 0


def cmd_stability_poly_compare(args) -> int:
    order = poly_compare(_parse_poly(args.p), _parse_poly(args.q))
    _emit(args, {"command": "poly_compare", "order": order.value}, [f"order = {order.value}"])
    return 0


def cmd_stability_defect(args) -> int:
    defect = framing_defect(
        _parse_poly(args.p_e), args.rk_e, _parse_poly(args.p_ker), args.rk_ker
    )
    coeffs = tuple(defect.coeffs)
    _emit(
        args,
        {"command": "framing_defect", "coeffs": [str(v) for v in coeffs]},
        [f"defect_coeffs = {_fmt(coeffs) if coeffs else '0'}"],
    )
    return 0


def cmd_stability_semistable(args) -> int:
    kermax = _parse_ranked_poly(args.kermax) if args.kermax is not None else None
    subsheaves = tuple(_parse_ranked_poly(text) for text in args.subsheaf or [])
    try:
        profile = PairProfile(
            rank=args.rk_e,
            hilbert=_parse_poly(args.p_e),
            phi_injective=args.phi_injective,
            epsilon_iso=args.epsilon_iso,
            kermax=kermax,
            subsheaves=subsheaves,
        )
    except ValueError as exc:
        raise DomainError(str(exc))
    verdict = oriented_sheaf_semistable(profile)
    _emit(
        args,
        {"command": "semistable", "semistable": verdict},
        [f"semistable = {_fmt(verdict)}"],
    )
    return 0


def _add_format(parser) -> None:
    parser.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="output as plain text (default) or a JSON tree with the same values",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swcalc",
        description=(
            "Exact-arithmetic Seiberg-Witten invariant bookkeeping for closed "
            "oriented 4-manifolds described by a manifold file."
        ),
        epilog=(
            "Vectors are comma-separated integers or rationals p/q in the fixed "
            "H^2 basis (e.g. --c=3 on a rank-one lattice, --h=1,1/2 on rank two); "
            "write --option=value when a vector starts with a minus sign. "
            "Polynomial coefficients are listed ascending. Exit codes: 0 ok, "
            "2 domain error, 3 parse error."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check every data invariant of a manifold file")
    p.add_argument("file")
    p.add_argument("--echo", action="store_true", help="emit the canonical file form")
    _add_format(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("dim", help="expected moduli dimensions")
    p.add_argument("file")
    p.add_argument("--c", help="characteristic element, e.g. --c=3 or --c=1,0")
    p.add_argument("--pu2", action="store_true", help="PU(2) index instead of abelian")
    p.add_argument("--p1", type=int, help="first Pontryagin number (with --pu2)")
    p.add_argument("--c1", help="determinant Chern class (with --pu2)")
    _add_format(p)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("sw-table", help="invariant pair table over a range of c")
    p.add_argument("file")
    p.add_argument("--cmin", type=int, required=True)
    p.add_argument("--cmax", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_sw_table)

    p = sub.add_parser("strata", help="ideal-monopole strata of the compactification")
    p.add_argument("file")
    p.add_argument("--p1", type=int, required=True)
    p.add_argument("--c1", required=True)
    p.add_argument("--max-level", type=int, default=None, dest="max_level")
    _add_format(p)
    p.set_defaults(func=cmd_strata)

    p = sub.add_parser("chamber", help="chamber classification for bplus = 1")
    p.add_argument("file")
    p.add_argument("--c", required=True)
    p.add_argument("--h", required=True, help="period ray, e.g. --h=1 or --h=1,1/2")
    p.add_argument("--b", default=None, help="twisting class, default 0")
    p.add_argument("--component-sign", type=int, default=1, dest="component_sign")
    _add_format(p)
    p.set_defaults(func=cmd_chamber)

    p = sub.add_parser("stability", help="exact stability predicates")
    stab = p.add_subparsers(dest="stability_command", required=True)

    q = stab.add_parser("slope", help="degree / rank")
    q.add_argument("--degree", required=True)
    q.add_argument("--rank", type=int, required=True)
    _add_format(q)
    q.set_defaults(func=cmd_stability_slope)

    q = stab.add_parser("pair-rank2", help="rank-2 oriented pair status")
    q.add_argument("--phi", choices=("zero", "nonzero"), required=True)
    q.add_argument(
        "--e-stability",
        choices=tuple(s.value for s in Stability),
        default="neither",
        dest="e_stability",
    )
    q.add_argument("--mu-div", dest="mu_div", default=None)
    q.add_argument("--mu-e", dest="mu_e", required=True)
    _add_format(q)
    q.set_defaults(func=cmd_stability_pair)

    q = stab.add_parser("rho-interval", help="parameter-stability interval")
    q.add_argument("--m-under", dest="m_under", required=True)
    q.add_argument("--m-over", dest="m_over", required=True)
    _add_format(q)
    q.set_defaults(func=cmd_stability_rho)

    q = stab.add_parser("poly-compare", help="eventual-dominance order")
    q.add_argument("--p", required=True, help="ascending coefficients, e.g. --p=0,1")
    q.add_argument("--q", required=True)
    _add_format(q)
    q.set_defaults(func=cmd_stability_poly_compare)

    q = stab.add_parser("defect", help="framing defect polynomial")
    q.add_argument("--p-e", dest="p_e", required=True)
    q.add_argument("--rk-e", dest="rk_e", type=int, required=True)
    q.add_argument("--p-ker", dest="p_ker", required=True)
    q.add_argument("--rk-ker", dest="rk_ker", type=int, required=True)
    _add_format(q)
    q.set_defaults(func=cmd_stability_defect)

    q = stab.add_parser("semistable", help="oriented sheaf pair semistability")
    q.add_argument("--rk-e", dest="rk_e", type=int, required=True)
    q.add_argument("--p-e", dest="p_e", required=True)
    q.add_argument("--phi-injective", action="store_true", dest="phi_injective")
    q.add_argument("--epsilon-iso", action="store_true", dest="epsilon_iso")
    q.add_argument("--kermax", default=None, help="rank:coeffs of the maximal kernel")
    q.add_argument(
        "--subsheaf",
        action="append",
        default=None,
        help="rank:coeffs witness, repeatable",
    )
    _add_format(q)
    q.set_defaults(func=cmd_stability_semistable)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ManifoldFileError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"parse error: cannot read input: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
