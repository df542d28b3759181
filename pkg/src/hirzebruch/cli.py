"""Command-line front end.

Subcommands ``lattice``, ``germ``, ``bound`` and ``verify`` read a JSON
input file and emit a report as text or canonical JSON.  Every number in a
JSON report is an integer or an exact rational rendered as ``"p/q"``; no
floating point appears anywhere, and JSON output is canonical (sorted keys),
so parsing and re-serializing a report is byte-identical.

Exit codes: 0 success, 1 validation error, 2 computational error (irrational
points and the like), 3 bound violation detected by ``verify``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from . import bounds, germs, verifier
from .errors import ComputationalError, HirzebruchError, ValidationError
from .lattice import DivisorClass, SurfaceModel

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_COMPUTATIONAL = 2
EXIT_BOUND_VIOLATION = 3


def _scalar(value) -> int | str:
    """Exact scalar for JSON: int, or "p/q" for a non-integral rational."""
    frac = Fraction(value)
    if frac.denominator == 1:
        return int(frac)
    return f"{frac.numerator}/{frac.denominator}"


def dumps_canonical(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(dumps_canonical(payload))
        return
    for line in _text_lines(payload, prefix=""):
        sys.stdout.write(line + "\n")


def _text_lines(value, prefix: str):
    if isinstance(value, dict):
        for key in sorted(value):
            inner = value[key]
            if isinstance(inner, (dict, list)):
                yield f"{prefix}{key}:"
                yield from _text_lines(inner, prefix + "  ")
            else:
                yield f"{prefix}{key}: {inner}"
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                yield f"{prefix}-"
                yield from _text_lines(item, prefix + "  ")
            else:
                yield f"{prefix}- {item}"
    else:
        yield f"{prefix}{value}"


def _load_input(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
    except OSError as exc:
        raise ValidationError(f"cannot read input file {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON in {path!r}: {exc}") from exc
    if not isinstance(payload, dict):
        raise ValidationError("input JSON must be an object")
    return payload


def _class_from(surface: SurfaceModel, pair, name: str) -> DivisorClass:
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise ValidationError(f"field {name!r} must be a pair [u, v]")
    u, v = pair
    if not isinstance(u, int) or not isinstance(v, int):
        raise ValidationError(f"field {name!r} must contain integers")
    return DivisorClass(surface, u, v)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_lattice(payload: dict) -> dict:
    if "e" not in payload or "a" not in payload:
        raise ValidationError("lattice input needs fields 'e' and 'a'")
    surface = SurfaceModel(payload["e"])
    a = _class_from(surface, payload["a"], "a")
    report: dict = {
        "e": surface.e,
        "a": [a.u, a.v],
        "canonical_class": [surface.canonical_class().u, surface.canonical_class().v],
        "is_effective": a.is_effective(),
        "is_ample": a.is_ample(),
        "has_integral_member": a.has_integral_member(),
        "is_big": a.is_big(),
        "h0": a.h0(),
        "volume": _scalar(a.volume()),
        "log_canonical_is_big": a.log_canonical_is_big(),
    }
    if a.has_integral_member():
        report["arithmetic_genus"] = a.arithmetic_genus()
    if "b" in payload:
        b = _class_from(surface, payload["b"], "b")
        report["b"] = [b.u, b.v]
        report["intersect"] = a.intersect(b)
    return report


def cmd_germ(payload: dict) -> dict:
    if "poly" not in payload:
        raise ValidationError("germ input needs field 'poly'")
    base_point = payload.get("base_point", (0, 0))
    germ = germs.PlaneCurveGerm(payload["poly"], base_point)
    report: dict = {
        "poly": str(payload["poly"]),
        "base_point": [_scalar(c) for c in germ.base_point],
        "multiplicity": germs.mult_at(germ),
    }
    unibranch = germs.is_unibranch(germ)
    report["is_unibranch"] = unibranch
    if not unibranch:
        raise ValidationError(f"germ {payload['poly']!r} is not unibranch at its base point")
    seq = germs.multiplicity_sequence(germ)
    report["multiplicity_sequence"] = list(seq.entries)
    report["delta_invariant"] = seq.delta()
    report["l_index"] = seq.l_index()
    if seq.entries[0] >= 2:
        report["admissible_contact_orders"] = sorted(germs.fz_admissible_set(seq))
    if "second" in payload:
        other = germs.PlaneCurveGerm(payload["second"], base_point)
        inter = germs.local_intersection(other, germ)
        report["second"] = str(payload["second"])
        if inter == germs.INFINITE_INTERSECTION:
            report["local_intersection"] = "infinity"
        else:
            report["local_intersection"] = inter
            m = germs.mult_at(germ)
            if germs.mult_at(other) == 1 and seq.entries[0] >= 2:
                report["in_admissible_set"] = inter in germs.fz_admissible_set(seq)
                bound = germs.delta_lower_bound(m, inter)
                report["delta_lower_bound"] = bound
                report["delta_bound_is_equality"] = bound == seq.delta()
    return report


def cmd_bound(payload: dict, gamma: Optional[int]) -> dict:
    if "e" not in payload or "components" not in payload:
        raise ValidationError("bound input needs fields 'e' and 'components'")
    comps = payload["components"]
    if not isinstance(comps, list) or len(comps) != 3:
        raise ValidationError("'components' must list exactly three [u, v] pairs")
    cfg = bounds.ThreeComponentConfig.from_pairs(payload["e"], comps)
    if gamma is None:
        gamma = payload.get("gamma")
    report = bounds.exceptional_set_bound(cfg, gamma)
    out = report.to_json()
    out["components"] = [[d.u, d.v] for d in cfg.components]
    out["e"] = cfg.surface.e
    if report.case_label != "F1-beta-zero-plane-referral":
        out["classified_systems"] = [
            {"system": s.label, "condition": s.condition}
            for s in bounds.classify_hyp_systems(cfg)
        ]
    out["emptiness_criterion"] = bounds.emptiness_criterion(cfg).value
    return out


def _parse_coefficients(entry: dict) -> "sympy.Expr":
    import sympy

    from .verifier import x, y

    coeffs = entry.get("coefficients")
    if not isinstance(coeffs, dict) or not coeffs:
        raise ValidationError("each component needs a nonempty 'coefficients' object")
    expr = sympy.Integer(0)
    for key, raw in coeffs.items():
        try:
            i_str, j_str = key.split(",")
            i, j = int(i_str), int(j_str)
        except ValueError as exc:
            raise ValidationError(f"bad exponent key {key!r}; expected 'i,j'") from exc
        if i < 0 or j < 0:
            raise ValidationError(f"negative exponent in key {key!r}")
        value = Fraction(raw) if isinstance(raw, str) else Fraction(int(raw))
        expr += sympy.Rational(value.numerator, value.denominator) * x**i * y**j
    return sympy.expand(expr)


def cmd_verify(payload: dict, gamma: Optional[int]) -> tuple[dict, bool]:
    if "e" not in payload or "components" not in payload:
        raise ValidationError("verify input needs fields 'e' and 'components'")
    surface = SurfaceModel(payload["e"])
    comps = payload["components"]
    if not isinstance(comps, list) or len(comps) != 3:
        raise ValidationError("'components' must list exactly three explicit curves")
    blowup_point = payload.get("blowup_point")
    if surface.e == 1 and blowup_point is None:
        raise ValidationError("verify on F_1 needs the field 'blowup_point'")
    curves = []
    for index, entry in enumerate(comps):
        if not isinstance(entry, dict) or "class" not in entry:
            raise ValidationError(f"component {index + 1} needs fields 'class' and 'coefficients'")
        cls = _class_from(surface, entry["class"], f"components[{index}].class")
        expr = _parse_coefficients(entry)
        curves.append(verifier.make_curve(cls, expr, blowup_point, label=f"B{index + 1}"))
    cfg = verifier.ExplicitConfig(curves)
    if gamma is None:
        gamma = payload.get("gamma")
    record = verifier.verify_bound(cfg, gamma)
    out = record.to_json()
    out["points"] = [lp.to_json() for lp in verifier.compute_N(cfg)]
    return out, record.within_bound


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hirzebruch",
        description="Exact intersection theory, curve-germ invariants and "
        "hyper-bitangency bounds on Hirzebruch surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, doc in (
        ("lattice", "divisor-class computations (pairing, h0, volume, genus, predicates)"),
        ("germ", "plane-curve germ invariants (multiplicity sequence, delta, contact orders)"),
        ("bound", "hyper-bitangency bounds for a numeric three-component configuration"),
        ("verify", "enumerate and check hyper-bitangent curves for an explicit fixture"),
    ):
        cmd = sub.add_parser(name, help=doc)
        cmd.add_argument("--input", required=True, help="path to the JSON input file")
        cmd.add_argument("--format", choices=("text", "json"), default="text")
        if name in ("bound", "verify"):
            cmd.add_argument(
                "--gamma",
                type=int,
                default=None,
                help="external degree constant; overrides any value in the input file",
            )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload = _load_input(args.input)
        if args.command == "lattice":
            _emit(cmd_lattice(payload), args.format)
        elif args.command == "germ":
            _emit(cmd_germ(payload), args.format)
        elif args.command == "bound":
            _emit(cmd_bound(payload, args.gamma), args.format)
        elif args.command == "verify":
            report, within = cmd_verify(payload, args.gamma)
            _emit(report, args.format)
            if not within:
                return EXIT_BOUND_VIOLATION
    except ComputationalError as exc:
        sys.stderr.write(f"computational error: {exc}\n")
        return EXIT_COMPUTATIONAL
    except (ValidationError, HirzebruchError) as exc:
        sys.stderr.write(f"validation error: {exc}\n")
        return EXIT_VALIDATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
