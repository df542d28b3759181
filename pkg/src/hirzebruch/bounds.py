"""Cardinality bounds for the set of hyper-bitangent rational curves.

A three-component configuration is the numeric shadow of a reduced curve
``B = B1 + B2 + B3`` with normal crossings on a Hirzebruch surface: the
surface index ``e`` plus the three component classes.  Standing
assumptions: every component class has an integral member, none is the
fiber or the negative section, and ``K + B`` is big.  Components are kept
sorted by ``alpha + beta`` ascending, so ``B1`` is always the smallest.

The case analysis classifies which linear systems can contain curves
meeting ``B`` in at most two points (counted on the normalization) and
emits an itemized bound report.  On ``F_1`` two contributions are not plain
numbers: the family ``d*C1 + f`` is bounded in terms of an external degree
constant ``gamma`` (symbolic unless supplied), and the family ``d*C1`` with
``d >= 3`` reduces to the projective plane and is reported as a referral,
never silently dropped.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

from .errors import ConfigError, HypothesisNotMetError, ValidationError
from .lattice import DivisorClass, SurfaceModel

#: Marker used for contributions delegated to the plane-curve literature.
PLANE_CASE_REFERRAL = "reduces-to-plane-case"


def _component_sort_key(d: DivisorClass) -> tuple[int, int, int]:
    return (d.u + d.v, d.u, d.v)


@dataclass(frozen=True)
class ThreeComponentConfig:
    """Surface index plus three sorted component classes.

    The constructor validates the standing assumptions and sorts the
    components by ``alpha + beta`` ascending (ties broken lexicographically),
    so permuting the input never changes the resulting bounds.
    """

    surface: SurfaceModel
    components: tuple[DivisorClass, DivisorClass, DivisorClass]

    def __init__(self, surface: SurfaceModel, components) -> None:
        comps = tuple(components)
        if len(comps) != 3:
            raise ConfigError(f"expected exactly three components, got {len(comps)}")
        for d in comps:
            if d.surface != surface:
                raise ConfigError(f"component {d} does not live on {surface}")
            if not d.has_integral_member():
                raise ConfigError(f"component {d} has no integral member")
            if (d.u, d.v) == (0, 1):
                raise ConfigError("no component may be the fiber class (0, 1)")
            if (d.u, d.v) == (1, -surface.e):
                raise ConfigError(
                    f"no component may be the negative-section class (1, {-surface.e})"
                )
            if surface.e == 0 and (d.u < 1 or d.v < 1):
                # on F_0 an integral curve that is neither ruling has bidegree >= (1, 1)
                raise ConfigError(f"component {d} is not the class of an integral curve on F_0")
        total = comps[0] + comps[1] + comps[2]
        if not total.log_canonical_is_big():
            raise ConfigError(f"K + B is not big for B = {total}")
        object.__setattr__(self, "surface", surface)
        object.__setattr__(self, "components", tuple(sorted(comps, key=_component_sort_key)))
        assert self.n_count() >= 3

    @classmethod
    def from_pairs(cls, e: int, pairs) -> "ThreeComponentConfig":
        surface = SurfaceModel(e)
        return cls(surface, [DivisorClass(surface, int(u), int(v)) for u, v in pairs])

    # -- derived data ---------------------------------------------------------

    def pairwise_intersections(self) -> tuple[int, int, int]:
        b1, b2, b3 = self.components
        return (b1.intersect(b2), b1.intersect(b3), b2.intersect(b3))

    def n_count(self) -> int:
        """Total number of pairwise intersection points of the components."""
        return sum(self.pairwise_intersections())

    def total_class(self) -> DivisorClass:
        b1, b2, b3 = self.components
        return b1 + b2 + b3

    def betas(self) -> tuple[int, int, int]:
        return tuple(d.v for d in self.components)

    def __str__(self) -> str:
        comps = ", ".join(str(d) for d in self.components)
        return f"3C[{self.surface}; {comps}]"


def n_count(cfg: ThreeComponentConfig) -> int:
    return cfg.n_count()


# ---------------------------------------------------------------------------
# classification of candidate linear systems
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HypSystem:
    """A linear system (or one-parameter family of systems) that may contain
    hyper-bitangent curves, together with the condition that admits it."""

    label: str
    condition: str


def _require_f1_hypotheses(cfg: ThreeComponentConfig) -> None:
    betas = cfg.betas()
    if betas[2] < 1:
        raise HypothesisNotMetError(
            "hypothesis-not-met: on F_1 the case analysis requires the largest "
            f"component to have beta >= 1 (betas are {betas}); an all-zero beta "
            "configuration reduces to the plane case instead"
        )


def classify_hyp_systems(cfg: ThreeComponentConfig) -> list[HypSystem]:
    """The linear systems that can contain hyper-bitangent curves.

    ``F_0``: both rulings, plus ``(1, 1)`` when some component is ``(1, 1)``.
    ``F_e`` with ``e >= 3``: only the negative section and the fiber.
    ``F_2``: those two, plus ``C1`` when some component is in ``|C1|``.
    ``F_1``: the negative section, fiber and ``C1``, plus the families
    ``d*C1`` (d >= 2) and ``d*C1 + f`` (d >= 1) gated on which of the two
    smallest components are in ``|C1|``.
    """
    e = cfg.surface.e
    b1, b2, b3 = cfg.components
    if e == 0:
        systems = [
            HypSystem("(1,0)", "always (ruling through an intersection point)"),
            HypSystem("(0,1)", "always (ruling through an intersection point)"),
        ]
        if (b1.u, b1.v) == (1, 1):
            systems.append(HypSystem("(1,1)", "some component lies in |(1,1)|"))
        return systems
    if e >= 3:
        return [
            HypSystem("C0", "always (the unique negative section)"),
            HypSystem("f", "always (fiber through an intersection point)"),
        ]
    if e == 2:
        systems = [
            HypSystem("C0", "always (the unique negative section)"),
            HypSystem("f", "always (fiber through an intersection point)"),
        ]
        if (b1.u, b1.v) == (1, 0):
            systems.append(HypSystem("C1", "some component lies in |C1|"))
        return systems
    # e == 1
    _require_f1_hypotheses(cfg)
    systems = [
        HypSystem("C0", "always (the exceptional section)"),
        HypSystem("f", "always (fiber through an intersection point)"),
        HypSystem("C1", "always (line through two intersection points)"),
    ]
    first_is_line = (b1.u, b1.v) == (1, 0)
    second_is_line = (b2.u, b2.v) == (1, 0)
    if first_is_line and second_is_line:
        systems.append(HypSystem("d*C1 (d>=2)", "both smallest components lie in |C1|"))
        systems.append(HypSystem("d*C1+f (d>=1)", "both smallest components lie in |C1|"))
    elif first_is_line:
        systems.append(HypSystem("2*C1", "smallest component lies in |C1|"))
        systems.append(HypSystem("C1+f", "smallest component lies in |C1|"))
    return systems


# ---------------------------------------------------------------------------
# bound report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundEntry:
    """One per-linear-system bound: numeric, symbolic in gamma, or a referral."""

    system: str
    kind: str  # "numeric" | "symbolic" | "referral"
    value: Optional[int] = None
    expression: Optional[str] = None
    i_set_bound: Optional[int] = None

    def to_json(self) -> dict:
        out: dict = {"system": self.system, "kind": self.kind}
        if self.value is not None:
            out["bound"] = self.value
        if self.expression is not None:
            out["expression"] = self.expression
        if self.i_set_bound is not None:
            out["i_set_bound"] = self.i_set_bound
        return out


@dataclass(frozen=True)
class BoundReport:
    """Itemized bound on the number of hyper-bitangent rational curves."""

    case_label: str
    n_count: int
    per_system: tuple[BoundEntry, ...]
    total_kind: str  # "numeric" | "symbolic" | "referral"
    total: Union[int, str]
    gamma: Optional[int] = None

    def numeric_total(self) -> Optional[int]:
        """Sum of the numeric entries; None when any entry is unresolved."""
        if any(entry.kind != "numeric" for entry in self.per_system):
            return None
        return sum(entry.value for entry in self.per_system)

    def numeric_part(self) -> int:
        """Sum of the numeric entries, ignoring symbolic/referral ones."""
        return sum(e.value for e in self.per_system if e.kind == "numeric")

    def covered_numeric_bound(self, systems) -> int:
        """Sum of numeric entries restricted to the named systems."""
        wanted = set(systems)
        return sum(e.value for e in self.per_system if e.kind == "numeric" and e.system in wanted)

    def to_json(self) -> dict:
        out = {
            "case_label": self.case_label,
            "n_count": self.n_count,
            "per_system": [entry.to_json() for entry in self.per_system],
            "total": {"kind": self.total_kind, "value": self.total},
        }
        if self.gamma is not None:
            out["gamma"] = self.gamma
        return out


def _integer_log_floor(base: int, value: int) -> int:
    """Largest t >= 0 with base**t <= value (value >= 1, base >= 2)."""
    assert base >= 2 and value >= 1
    t, power = 0, 1
    while power * base <= value:
        power *= base
        t += 1
    return t


def c1_pair_bound(n: int) -> int:
    """Number of unordered point pairs: at most one curve in |C1| per pair."""
    return n * (n - 1) // 2


def hyp_c1_f1_bound(cfg: ThreeComponentConfig) -> int:
    """Bound for |C1|-members meeting B in at most two points on ``F_1``."""
    if cfg.surface.e != 1:
        raise ValidationError(f"the C1 pair bound applies on F_1 only, not {cfg.surface}")
    _require_f1_hypotheses(cfg)
    return c1_pair_bound(cfg.n_count())


def _i_set_entry(base: int, gamma: Optional[int]) -> BoundEntry:
    """Entry for the ``d*C1 + f`` family in the both-lines case on F_1.

    There are ``2*base`` point pairs; for each, the set of degrees ``d`` that
    occur is bounded by ``1 + floor(log_base(gamma - 1))``.
    """
    system = "d*C1+f (d>=1)"
    formula = f"2*{base}*(1 + floor(log_{base}(gamma - 1)))"
    if gamma is None:
        return BoundEntry(system=system, kind="symbolic", expression=formula)
    if gamma < 1:
        raise ValidationError("gamma must be a positive integer")
    per_set = 0 if gamma == 1 else 1 + _integer_log_floor(base, gamma - 1)
    return BoundEntry(
        system=system,
        kind="numeric",
        value=2 * base * per_set,
        expression=formula,
        i_set_bound=per_set,
    )


def exceptional_set_bound(cfg: ThreeComponentConfig, gamma: Optional[int] = None) -> BoundReport:
    """Itemized bound on the algebraic exceptional set of the configuration.

    ``gamma`` is the external degree constant for the non-effective branch on
    ``F_1``; when absent that contribution stays symbolic.
    """
    if gamma is not None and (not isinstance(gamma, int) or gamma < 1):
        raise ValidationError("gamma must be a positive integer")
    e = cfg.surface.e
    b1, b2, b3 = cfg.components
    n = cfg.n_count()
    s2, s3 = b2.u + b2.v, b3.u + b3.v

    if e == 0:
        ones = sum(1 for d in cfg.components if (d.u, d.v) == (1, 1))
        entries = [
            BoundEntry("(1,0)", "numeric", n),
            BoundEntry("(0,1)", "numeric", n),
        ]
        if ones == 1:
            entries.append(BoundEntry("(1,1)", "numeric", s2 * s3))
        elif ones == 2:
            entries.append(BoundEntry("(1,1)", "numeric", 4 * s3))
        elif ones == 3:
            entries.append(BoundEntry("(1,1)", "numeric", 12))
        label = f"F0-{('none', 'one', 'two', 'all')[ones]}-(1,1)"
        total = sum(entry.value for entry in entries)
        return BoundReport(label, n, tuple(entries), "numeric", total, gamma)

    if e >= 3:
        entries = [BoundEntry("C0", "numeric", 1), BoundEntry("f", "numeric", n)]
        return BoundReport("Fe-minimal-large", n, tuple(entries), "numeric", 1 + n, gamma)

    if e == 2:
        lines = sum(1 for d in cfg.components if (d.u, d.v) == (1, 0))
        entries = [BoundEntry("C0", "numeric", 1), BoundEntry("f", "numeric", n)]
        if lines == 1:
            entries.append(BoundEntry("C1", "numeric", (2 * b2.u + b2.v) * (2 * b3.u + b3.v)))
        elif lines == 2:
            entries.append(BoundEntry("C1", "numeric", 4 * (2 * b3.u + b3.v)))
        elif lines == 3:
            entries.append(BoundEntry("C1", "numeric", 12))
        label = f"F2-{('none', 'one', 'two', 'all')[lines]}-C1"
        total = sum(entry.value for entry in entries)
        return BoundReport(label, n, tuple(entries), "numeric", total, gamma)

    # e == 1
    betas = cfg.betas()
    if all(beta == 0 for beta in betas):
        referral = f1_beta_zero_referral(cfg)
        entry = BoundEntry(
            "all systems",
            "referral",
            expression=f"plane curve of degree {referral.total_degree} "
            f"with components of degrees {referral.degrees}",
        )
        return BoundReport(
            "F1-beta-zero-plane-referral", n, (entry,), "referral", PLANE_CASE_REFERRAL, gamma
        )
    _require_f1_hypotheses(cfg)
    both_lines = (b1.u, b1.v) == (1, 0) and (b2.u, b2.v) == (1, 0)
    entries = [
        BoundEntry("C0", "numeric", 1),
        BoundEntry("f", "numeric", n),
        BoundEntry("C1", "numeric", c1_pair_bound(n)),
    ]
    if not both_lines:
        entries.append(BoundEntry("2*C1", "numeric", s2 * s3))
        entries.append(BoundEntry("C1+f", "numeric", s2 * s3))
        total = sum(entry.value for entry in entries)
        return BoundReport("F1-not-both-C1", n, tuple(entries), "numeric", total, gamma)
    entries.append(BoundEntry("2*C1", "numeric", 2 * s3))
    entries.append(
        BoundEntry(
            "d*C1 (d>=3)",
            "referral",
            expression="plane curves of degree d+1 through the image of B",
        )
    )
    entries.append(_i_set_entry(s3, gamma))
    numeric = sum(entry.value for entry in entries if entry.kind == "numeric")
    symbolic = [entry.expression for entry in entries if entry.kind == "symbolic"]
    parts = [str(numeric)] + symbolic + [f"[{PLANE_CASE_REFERRAL}: d*C1, d>=3]"]
    return BoundReport("F1-both-C1", n, tuple(entries), "symbolic", " + ".join(parts), gamma)


# ---------------------------------------------------------------------------
# emptiness criterion and the plane-case referral
# ---------------------------------------------------------------------------

class EmptinessVerdict(enum.Enum):
    """Whether the generic-emptiness criterion applies to the classes.

    ``APPLIES`` means: for a *general* curve with these component classes the
    algebraic exceptional set is empty.  It is a statement about general
    members, not about one specific curve.
    """

    APPLIES = "applies"
    NOT_APPLICABLE = "not-applicable"


def emptiness_criterion(cfg: ThreeComponentConfig) -> EmptinessVerdict:
    """Generic-emptiness test: alphas all >= 3, and (for e >= 1) some beta >= 3."""
    alphas = [d.u for d in cfg.components]
    betas = [d.v for d in cfg.components]
    if cfg.surface.e == 0:
        ok = all(a >= 3 for a in alphas) and all(b >= 3 for b in betas)
    else:
        ok = all(a >= 3 for a in alphas) and any(b >= 3 for b in betas)
    return EmptinessVerdict.APPLIES if ok else EmptinessVerdict.NOT_APPLICABLE


@dataclass(frozen=True)
class PlaneCaseReferral:
    """The plane model of an all-beta-zero configuration on ``F_1``.

    The components are pullbacks of plane curves of the recorded degrees;
    the bounds come from the plane-case literature and are not recomputed.
    """

    degrees: tuple[int, int, int]
    total_degree: int
    marker: str = PLANE_CASE_REFERRAL

    def to_json(self) -> dict:
        return {
            "degrees": list(self.degrees),
            "total_degree": self.total_degree,
            "marker": self.marker,
        }


def f1_beta_zero_referral(cfg: ThreeComponentConfig) -> PlaneCaseReferral:
    """Plane model of an ``F_1`` configuration with all betas zero."""
    if cfg.surface.e != 1:
        raise ValidationError("the plane-case referral applies on F_1 only")
    if any(d.v != 0 for d in cfg.components):
        raise ValidationError("the plane-case referral requires every beta to vanish")
    degrees = tuple(sorted((d.u for d in cfg.components), reverse=True))
    total = sum(degrees)
    assert total >= 4  # K + B big with beta = 0 forces total degree >= 4
    return PlaneCaseReferral(degrees=degrees, total_degree=total)
