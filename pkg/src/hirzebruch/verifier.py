"""Desk-scale exact verifier for hyper-bitangency on explicit configurations.

Given defining equations for the three components, the verifier locates the
pairwise intersection points, enumerates the finite candidate families of
low-class smooth rational curves dictated by the case analysis, and decides
for each candidate whether it meets the union of the components in at most
two points.  Found counts are then compared with the numeric bounds.

Coordinate models
-----------------
``e = 0``   the product of two projective lines in an affine chart ``(x, y)``;
            a class ``(u, v)`` curve is a polynomial of bidegree exactly
            ``(u, v)``.
``e = 1``   the plane model: a class ``(u, v)`` curve is a plane curve of
            degree ``u + v`` with multiplicity exactly ``v`` at a designated
            blow-up point; the negative section is the exceptional line and
            has no equation.
``e = 2``   the chart of the rank-two projectivized bundle: a class
            ``(u, v)`` curve is ``sum_j c_j(x) * y**j`` with ``j <= u`` and
            ``deg c_j <= v + 2*j``; the negative section is ``y = 0``.
            (The plane-multiplicity dictionary is specific to ``e = 1``;
            this chart model is the ``e``-aware replacement, restricted to
            the candidate families ``C0``, ``f``, ``C1``.)

Counting is exact: every candidate is a smooth rational curve with an
explicit rational parametrization, each component pulls back to a binary
form of degree equal to the intersection number (so points at infinity of
the chart are counted), and distinct geometric points are counted as the
degree of the squarefree part of the product, without locating conjugate
irrational points.  Candidate evaluation is embarrassingly parallel; the
implementation is purely functional.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import sympy
from sympy import QQ, Poly, Rational, expand

from .bounds import BoundReport, ThreeComponentConfig, exceptional_set_bound
from .errors import (
    DegenerateEnumerationError,
    FixtureError,
    IrrationalIntersectionPoint,
    SharedComponentError,
    TangentialContact,
    TriplePoint,
    UnsupportedCandidateError,
    ValidationError,
)
from .lattice import DivisorClass, SurfaceModel

x, y = sympy.symbols("x y")
t = sympy.Symbol("t")

Point = tuple[Fraction, Fraction]


def _rat(value) -> Rational:
    if isinstance(value, Rational):
        return value
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    if isinstance(value, int):
        return Rational(value)
    if isinstance(value, str):
        return Rational(Fraction(value))
    raise ValidationError(f"not an exact rational: {value!r}")


def _frac(value: Rational) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def _subs_point(expr: sympy.Expr, p: tuple[Rational, Rational]) -> Rational:
    return expr.subs({x: p[0], y: p[1]}, simultaneous=True)


def _gradient(expr: sympy.Expr) -> tuple[sympy.Expr, sympy.Expr]:
    return (sympy.diff(expr, x), sympy.diff(expr, y))


def _rational_roots(expr: sympy.Expr, gen: sympy.Symbol) -> list[Rational]:
    """Distinct rational roots of a nonzero univariate polynomial."""
    p = Poly(expr, gen, domain=QQ)
    roots = []
    for factor, _ in p.factor_list()[1]:
        if factor.degree() == 1:
            a, b = factor.all_coeffs()
            roots.append(Rational(-b, a))
    return roots


def _is_squarefree(expr: sympy.Expr) -> bool:
    g = sympy.gcd(sympy.gcd(expr, sympy.diff(expr, x)), sympy.diff(expr, y))
    return sympy.total_degree(g) == 0


def _normal_key(expr: sympy.Expr) -> str:
    return sympy.srepr(Poly(expr, x, y, domain=QQ).monic().as_expr())


# ---------------------------------------------------------------------------
# binary forms on the parameter line of a candidate
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BinaryForm:
    """A binary form recorded as its dehomogenization plus a formal degree.

    The form of formal degree ``d`` with dehomogenization ``p(t)`` vanishes
    at infinity with multiplicity ``d - deg p``; distinct projective roots
    are therefore the distinct affine roots plus possibly infinity.
    """

    poly: sympy.Expr
    degree: int

    def __post_init__(self) -> None:
        if self.poly == 0:
            raise ValidationError("binary form must be nonzero")
        assert sympy.degree(self.poly, t) <= self.degree

    def multiply(self, other: "BinaryForm") -> "BinaryForm":
        return BinaryForm(expand(self.poly * other.poly), self.degree + other.degree)

    def divide_exact(self, other: "BinaryForm") -> "BinaryForm":
        q, r = sympy.div(self.poly, other.poly, t)
        assert r == 0, "binary form division must be exact"
        return BinaryForm(expand(q), self.degree - other.degree)

    def distinct_root_count(self) -> int:
        """Number of distinct roots in the projective line over the closure."""
        p = Poly(self.poly, t, domain=QQ)
        if p.degree() <= 0:
            affine = 0
        else:
            affine = int(sympy.degree(sympy.quo(self.poly, sympy.gcd(self.poly, sympy.diff(self.poly, t)), t), t))
        infinity = 1 if sympy.degree(self.poly, t) < self.degree else 0
        return affine + infinity

    def rational_roots(self) -> list[Rational]:
        if sympy.degree(self.poly, t) <= 0:
            return []
        return _rational_roots(self.poly, t)

    def has_infinity_root(self) -> bool:
        return sympy.degree(self.poly, t) < self.degree


def _constant_form() -> BinaryForm:
    return BinaryForm(sympy.Integer(1), 0)


# ---------------------------------------------------------------------------
# explicit curves
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExplicitCurve:
    """A curve on the surface given by an equation in the chart model.

    ``poly`` is None exactly for the exceptional section on ``F_1``, which
    has no equation in the plane model.
    """

    cls: DivisorClass
    poly: Optional[sympy.Expr]
    blowup_point: Optional[tuple[Rational, Rational]] = None
    label: str = ""

    @property
    def surface(self) -> SurfaceModel:
        return self.cls.surface

    def is_exceptional_section(self) -> bool:
        return self.poly is None

    def key(self) -> str:
        if self.poly is None:
            return "E"
        return f"{self.cls.u},{self.cls.v}:{_normal_key(self.poly)}"

    def coefficients(self) -> Optional[dict[str, Union[int, str]]]:
        """Exponent-indexed coefficient map (None for the exceptional section)."""
        if self.poly is None:
            return None
        out: dict[str, Union[int, str]] = {}
        for (i, j), c in Poly(self.poly, x, y, domain=QQ).terms():
            out[f"{i},{j}"] = _scalar_json(Fraction(int(c.p), int(c.q)))
        return out

    def to_json(self) -> dict:
        return {
            "class": [self.cls.u, self.cls.v],
            "coefficients": self.coefficients(),
            "label": self.label or ("E" if self.poly is None else ""),
        }

    def __str__(self) -> str:
        body = "E (exceptional)" if self.poly is None else str(self.poly)
        return f"[{self.cls} on {self.surface}: {body}]"


def _poly_coeff_profile(expr: sympy.Expr) -> dict[int, sympy.Expr]:
    """Coefficients of powers of y, as polynomials in x."""
    p = Poly(expr, y)
    return {int(m[0]): c for m, c in zip(p.monoms(), p.coeffs())}


def _mult_at_point(expr: sympy.Expr, p: tuple[Rational, Rational]) -> int:
    shifted = expand(expr.subs({x: x + p[0], y: y + p[1]}, simultaneous=True))
    return min(i + j for (i, j), _ in Poly(shifted, x, y, domain=QQ).terms())


def make_curve(
    cls: DivisorClass,
    poly,
    blowup_point=None,
    label: str = "",
) -> ExplicitCurve:
    """Validate and wrap an equation as a curve of the given class."""
    e = cls.surface.e
    expr = expand(sympy.sympify(poly, locals={"x": x, "y": y}))
    try:
        Poly(expr, x, y, domain=QQ)
    except sympy.PolynomialError as exc:
        raise FixtureError(f"equation is not a polynomial over the rationals: {exc}") from exc
    if expr == 0:
        raise FixtureError("curve equation must be nonzero")
    if not _is_squarefree(expr):
        raise FixtureError(f"curve equation {expr} is not squarefree")
    u, v = cls.u, cls.v

    if e == 0:
        if sympy.degree(expr, x) != u or sympy.degree(expr, y) != v:
            raise FixtureError(
                f"equation {expr} has bidegree ({sympy.degree(expr, x)}, {sympy.degree(expr, y)}),"
                f" expected exactly ({u}, {v})"
            )
        return ExplicitCurve(cls, expr, None, label)

    if e == 1:
        if blowup_point is None:
            raise FixtureError("curves on F_1 need the designated blow-up point")
        bp = (_rat(blowup_point[0]), _rat(blowup_point[1]))
        if sympy.total_degree(expr) != u + v:
            raise FixtureError(f"plane degree of {expr} is {sympy.total_degree(expr)}, expected {u + v}")
        passes = _subs_point(expr, bp) == 0
        mult = _mult_at_point(expr, bp) if passes else 0
        if mult != v:
            raise FixtureError(
                f"multiplicity of {expr} at the blow-up point is {mult}, expected exactly {v}"
            )
        return ExplicitCurve(cls, expr, bp, label)

    if e == 2:
        if sympy.degree(expr, y) != u:
            raise FixtureError(f"y-degree of {expr} is {sympy.degree(expr, y)}, expected {u}")
        profile = _poly_coeff_profile(expr)
        tight = False
        for j, coeff in profile.items():
            dj = sympy.degree(coeff, x) if coeff.free_symbols else 0
            if dj > v + 2 * j:
                raise FixtureError(
                    f"coefficient of y**{j} in {expr} has x-degree {dj}, allowed at most {v + 2 * j}"
                )
            if dj == v + 2 * j:
                tight = True
        if not tight:
            raise FixtureError(
                f"equation {expr} does not attain its class degree profile; it would carry "
                "fiber components at infinity"
            )
        return ExplicitCurve(cls, expr, None, label)

    raise FixtureError(f"explicit mode supports e in {{0, 1, 2}}, not e = {e}")


def exceptional_section(surface: SurfaceModel, blowup_point) -> ExplicitCurve:
    """The exceptional section on ``F_1`` (no equation in the plane model)."""
    if surface.e != 1:
        raise ValidationError("the equation-free exceptional section exists on F_1 only")
    bp = (_rat(blowup_point[0]), _rat(blowup_point[1]))
    return ExplicitCurve(DivisorClass(surface, 1, -1), None, bp, "E")


def negative_section(surface: SurfaceModel) -> ExplicitCurve:
    """The negative section as an explicit curve (``y = 0`` in the e = 2 chart)."""
    if surface.e != 2:
        raise ValidationError("the chart negative section is implemented for e = 2")
    return ExplicitCurve(DivisorClass(surface, 1, -2), y, None, "C0")


# ---------------------------------------------------------------------------
# explicit configurations and the intersection set N
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LabeledPoint:
    """An intersection point of two components, labelled by their indices."""

    point: Point
    pair: tuple[int, int]

    def to_json(self) -> dict:
        return {
            "point": [_scalar_json(self.point[0]), _scalar_json(self.point[1])],
            "pair": list(self.pair),
        }


def _scalar_json(value: Fraction) -> Union[int, str]:
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


def _leading_form_at(expr: sympy.Expr, p: tuple[Rational, Rational]) -> sympy.Expr:
    shifted = expand(expr.subs({x: x + p[0], y: y + p[1]}, simultaneous=True))
    terms = Poly(shifted, x, y, domain=QQ).terms()
    m = min(i + j for (i, j), _ in terms)
    return sympy.Add(*[c * x**i * y**j for (i, j), c in terms if i + j == m])


@dataclass(frozen=True)
class ExplicitConfig:
    """Three explicit components with validated normal crossings.

    Construction locates every pairwise intersection point, verifies that
    each is rational, transverse, and not a triple point, and caches the
    resulting set; the cardinality is certified against the lattice pairing
    numbers, so nothing can hide at chart infinity or over the blow-up point.
    """

    curves: tuple[ExplicitCurve, ExplicitCurve, ExplicitCurve]
    numeric: ThreeComponentConfig
    points: tuple[LabeledPoint, ...]
    blowup_point: Optional[tuple[Rational, Rational]]

    def __init__(self, curves) -> None:
        curves = tuple(curves)
        if len(curves) != 3:
            raise FixtureError(f"expected three components, got {len(curves)}")
        surface = curves[0].surface
        if any(c.surface != surface for c in curves):
            raise FixtureError("components live on different surfaces")
        if any(c.poly is None for c in curves):
            raise FixtureError("a component cannot be the exceptional section")
        bp = None
        if surface.e == 1:
            bps = {c.blowup_point for c in curves}
            if len(bps) != 1:
                raise FixtureError("components disagree on the blow-up point")
            bp = curves[0].blowup_point
        numeric = ThreeComponentConfig(surface, [c.cls for c in curves])
        points = _validate_and_locate(curves, numeric, bp)
        object.__setattr__(self, "curves", curves)
        object.__setattr__(self, "numeric", numeric)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "blowup_point", bp)

    @property
    def surface(self) -> SurfaceModel:
        return self.curves[0].surface


def _pair_points(F: sympy.Expr, G: sympy.Expr) -> list[tuple[Rational, Rational]]:
    """All rational affine common points of two coprime polynomials."""
    rx = expand(sympy.resultant(F, G, y))
    ry = expand(sympy.resultant(F, G, x))
    if rx == 0 or ry == 0:
        raise SharedComponentError("components share a curve component")
    xs = _rational_roots(rx, x) if rx.free_symbols else []
    ys = _rational_roots(ry, y) if ry.free_symbols else []
    pts = []
    for a in xs:
        for b in ys:
            if _subs_point(F, (a, b)) == 0 and _subs_point(G, (a, b)) == 0:
                pts.append((a, b))
    return pts


def _validate_and_locate(curves, numeric: ThreeComponentConfig, bp) -> tuple[LabeledPoint, ...]:
    polys = [c.poly for c in curves]
    for i in range(3):
        for j in range(i + 1, 3):
            if sympy.total_degree(sympy.gcd(polys[i], polys[j])) > 0:
                raise SharedComponentError(f"components {i + 1} and {j + 1} share a component")
    e = curves[0].surface.e
    located: list[LabeledPoint] = []
    seen: dict[tuple[Rational, Rational], tuple[int, int]] = {}
    for i in range(3):
        for j in range(i + 1, 3):
            F, G = polys[i], polys[j]
            expected = curves[i].cls.intersect(curves[j].cls)
            if e == 1 and curves[i].cls.v >= 1 and curves[j].cls.v >= 1:
                li = _leading_form_at(F, bp)
                lj = _leading_form_at(G, bp)
                if sympy.total_degree(sympy.gcd(li, lj)) > 0:
                    raise TangentialContact(
                        f"components {i + 1} and {j + 1} share a tangent direction at the "
                        "blow-up point; their strict transforms meet on the exceptional line"
                    )
            pts = _pair_points(F, G)
            if e == 1:
                pts = [p for p in pts if p != bp]
            for p in pts:
                for idx, P in ((i, F), (j, G)):
                    grad = tuple(_subs_point(g, p) for g in _gradient(P))
                    if grad == (0, 0):
                        raise TangentialContact(
                            f"component {idx + 1} is singular at the intersection point {p}"
                        )
                gF = tuple(_subs_point(g, p) for g in _gradient(F))
                gG = tuple(_subs_point(g, p) for g in _gradient(G))
                if gF[0] * gG[1] - gF[1] * gG[0] == 0:
                    raise TangentialContact(
                        f"components {i + 1} and {j + 1} are tangent at {p}"
                    )
                third = 3 - i - j
                if _subs_point(polys[third], p) == 0:
                    raise TriplePoint(f"all three components pass through {p}")
                if p in seen:
                    raise TriplePoint(f"point {p} lies on more than two components")
            if len(pts) < expected:
                raise IrrationalIntersectionPoint(
                    f"components {i + 1} and {j + 1} meet with total multiplicity {expected} "
                    f"but only {len(pts)} rational transverse points were located; the rest "
                    "are irrational, at chart infinity, or over the blow-up point"
                )
            assert len(pts) == expected
            for p in pts:
                seen[p] = (i, j)
                located.append(LabeledPoint((_frac(p[0]), _frac(p[1])), (i + 1, j + 1)))
    located.sort(key=lambda lp: (lp.pair, lp.point))
    return tuple(located)


def compute_N(cfg: ExplicitConfig) -> list[LabeledPoint]:
    """All pairwise intersection points with their component-pair labels."""
    return list(cfg.points)


# ---------------------------------------------------------------------------
# pullback of a component to the parameter line of a candidate
# ---------------------------------------------------------------------------

def _centered_forms(expr: sympy.Expr, p: tuple[Rational, Rational]) -> dict[int, sympy.Expr]:
    """Homogeneous graded parts of the Taylor expansion at ``p`` (in x, y)."""
    shifted = expand(expr.subs({x: x + p[0], y: y + p[1]}, simultaneous=True))
    parts: dict[int, sympy.Expr] = {}
    for (i, j), c in Poly(shifted, x, y, domain=QQ).terms():
        parts[i + j] = parts.get(i + j, 0) + c * x**i * y**j
    return parts


def _pullback_e0(candidate: ExplicitCurve, comp: ExplicitCurve) -> BinaryForm:
    u, v = candidate.cls.u, candidate.cls.v
    G = comp.poly
    deg = candidate.cls.intersect(comp.cls)
    if (u, v) == (1, 0):
        a = _line_root(candidate.poly, x)
        return BinaryForm(expand(G.subs({x: a, y: t}, simultaneous=True)), deg)
    if (u, v) == (0, 1):
        b = _line_root(candidate.poly, y)
        return BinaryForm(expand(G.subs({x: t, y: b}, simultaneous=True)), deg)
    # (1, 1): y = -(B t + D) / (A t + C)
    p = Poly(candidate.poly, x, y)
    A = p.coeff_monomial(x * y)
    B = p.coeff_monomial(x)
    C = p.coeff_monomial(y)
    D = p.coeff_monomial(1)
    num = expand(-(B * t + D))
    den = expand(A * t + C)
    gy = Poly(G, y)
    vy = comp.cls.v
    total = sympy.Integer(0)
    for (j,), coeff in zip(gy.monoms(), gy.coeffs()):
        total += coeff.subs(x, t) * num**j * den ** (vy - j)
    return BinaryForm(expand(total), deg)


def _line_root(expr: sympy.Expr, gen: sympy.Symbol) -> Rational:
    p = Poly(expr, gen)
    a, b = p.all_coeffs()
    return Rational(-b, a)


def _pullback_e1(candidate: ExplicitCurve, comp: ExplicitCurve, bp) -> BinaryForm:
    deg = candidate.cls.intersect(comp.cls)
    beta = comp.cls.v
    G = comp.poly
    kind = (candidate.cls.u, candidate.cls.v)
    if kind == (1, -1):  # exceptional section: parameter is the direction (1 : t)
        L = _leading_form_at(G, bp)
        return BinaryForm(expand(L.subs({x: 1, y: t}, simultaneous=True)), beta)
    if kind == (0, 1):  # line through the blow-up point
        dx, dy = _line_direction(candidate.poly)
        pull = expand(G.subs({x: bp[0] + dx * t, y: bp[1] + dy * t}, simultaneous=True))
        stripped = BinaryForm(pull, deg + beta).divide_exact(BinaryForm(t**beta, beta))
        return stripped
    if kind == (1, 0):  # line avoiding the blow-up point
        q0, (dx, dy) = _line_base_and_direction(candidate.poly)
        pull = expand(G.subs({x: q0[0] + dx * t, y: q0[1] + dy * t}, simultaneous=True))
        return BinaryForm(pull, deg)
    if kind == (1, 1):  # smooth conic through the blow-up point
        Q = candidate.poly
        grad = tuple(_subs_point(g, bp) for g in _gradient(Q))
        parts = _centered_forms(Q, bp)
        K = parts.get(2, sympy.Integer(0))
        L = expand(grad[0] + grad[1] * t)  # tangent-direction form, degree 1
        Kt = expand(K.subs({x: 1, y: t}, simultaneous=True))
        d = sympy.total_degree(G)
        comp_parts = _centered_forms(G, bp)
        total = sympy.Integer(0)
        for k, form in comp_parts.items():
            fk = expand(form.subs({x: 1, y: t}, simultaneous=True))
            total += fk * (-L) ** k * Kt ** (d - k)
        pull = BinaryForm(expand(total), 2 * d)
        return pull.divide_exact(BinaryForm(expand(L**beta), beta))
    raise UnsupportedCandidateError(f"unsupported candidate class {candidate.cls} on F_1")


def _line_direction(expr: sympy.Expr) -> tuple[Rational, Rational]:
    p = Poly(expr, x, y)
    a = p.coeff_monomial(x)
    b = p.coeff_monomial(y)
    return (-b, a)


def _line_base_and_direction(expr: sympy.Expr):
    p = Poly(expr, x, y)
    a = p.coeff_monomial(x)
    b = p.coeff_monomial(y)
    c = p.coeff_monomial(1)
    if b != 0:
        base = (Rational(0), Rational(-c, b))
    else:
        base = (Rational(-c, a), Rational(0))
    return base, (-b, a)


def _pullback_e2(candidate: ExplicitCurve, comp: ExplicitCurve) -> BinaryForm:
    deg = candidate.cls.intersect(comp.cls)
    G = comp.poly
    kind = (candidate.cls.u, candidate.cls.v)
    if kind == (1, -2):  # negative section y = 0
        pull = expand(G.subs({x: t, y: 0}, simultaneous=True))
        return BinaryForm(pull, deg)
    if kind == (0, 1):  # fiber x = a
        a = _line_root(candidate.poly, x)
        pull = expand(G.subs({x: a, y: t}, simultaneous=True))
        return BinaryForm(pull, deg)
    if kind == (1, 0):  # section c + q(x) y = 0
        p = Poly(candidate.poly, y)
        q = p.coeff_monomial(y)
        c = p.coeff_monomial(1)
        qt = expand(q.subs(x, t) if q.free_symbols else q)
        gy = Poly(G, y)
        au = comp.cls.u
        total = sympy.Integer(0)
        for (j,), coeff in zip(gy.monoms(), gy.coeffs()):
            cj = coeff.subs(x, t) if coeff.free_symbols else coeff
            total += cj * (-c) ** j * qt ** (au - j)
        return BinaryForm(expand(total), deg)
    raise UnsupportedCandidateError(f"unsupported candidate class {candidate.cls} on F_2")


_SUPPORTED = {
    0: {(1, 0), (0, 1), (1, 1)},
    1: {(0, 1), (1, -1), (1, 0), (1, 1)},
    2: {(0, 1), (1, -2), (1, 0)},
}


def _pullback(candidate: ExplicitCurve, comp: ExplicitCurve, cfg: ExplicitConfig) -> BinaryForm:
    e = cfg.surface.e
    if e == 0:
        return _pullback_e0(candidate, comp)
    if e == 1:
        return _pullback_e1(candidate, comp, cfg.blowup_point)
    return _pullback_e2(candidate, comp)


def _validate_candidate(candidate: ExplicitCurve, cfg: ExplicitConfig) -> None:
    e = cfg.surface.e
    kind = (candidate.cls.u, candidate.cls.v)
    if kind not in _SUPPORTED[e]:
        raise UnsupportedCandidateError(
            f"candidate class {candidate.cls} is outside the supported scope on F_{e}"
        )
    if candidate.poly is None:
        return
    if e == 0 and kind == (1, 1):
        p = Poly(candidate.poly, x, y)
        A = p.coeff_monomial(x * y)
        B = p.coeff_monomial(x)
        C = p.coeff_monomial(y)
        D = p.coeff_monomial(1)
        if A * D - B * C == 0:
            raise UnsupportedCandidateError(f"(1,1) candidate {candidate.poly} is reducible")
    if e == 1 and kind == (1, 1):
        coeffs = Poly(candidate.poly, x, y)
        a = coeffs.coeff_monomial(x**2)
        b = coeffs.coeff_monomial(x * y)
        c = coeffs.coeff_monomial(y**2)
        d = coeffs.coeff_monomial(x)
        f = coeffs.coeff_monomial(y)
        g = coeffs.coeff_monomial(1)
        det = sympy.Matrix(
            [[2 * a, b, d], [b, 2 * c, f], [d, f, 2 * g]]
        ).det()
        if det == 0:
            raise UnsupportedCandidateError(f"conic candidate {candidate.poly} is singular")
    if e == 2 and kind == (1, 0):
        if Poly(candidate.poly, y).coeff_monomial(1) == 0:
            raise UnsupportedCandidateError(f"section candidate {candidate.poly} is reducible")
    for idx, comp in enumerate(cfg.curves):
        if sympy.total_degree(sympy.gcd(candidate.poly, comp.poly)) > 0:
            raise SharedComponentError(
                f"candidate shares a component with component {idx + 1}"
            )


@dataclass(frozen=True)
class HyperBitangencyResult:
    """Count of distinct points of the candidate on the boundary curve."""

    candidate: ExplicitCurve
    count: int
    is_hyper_bitangent: bool
    witnesses: tuple[Point, ...]

    def to_json(self) -> dict:
        return {
            "candidate": str(self.candidate),
            "count": self.count,
            "is_hyper_bitangent": self.is_hyper_bitangent,
            "witnesses": [[_scalar_json(w[0]), _scalar_json(w[1])] for w in self.witnesses],
        }


def _witness_points(candidate: ExplicitCurve, cfg: ExplicitConfig, params: list[Rational]) -> tuple[Point, ...]:
    """Map rational parameter values back to affine chart points where possible."""
    pts = []
    for value in params:
        pt = _param_to_point(candidate, cfg, value)
        if pt is not None:
            pts.append(pt)
    return tuple(sorted(set(pts)))


def _param_to_point(candidate: ExplicitCurve, cfg: ExplicitConfig, value: Rational) -> Optional[Point]:
    e = cfg.surface.e
    kind = (candidate.cls.u, candidate.cls.v)
    if e == 0:
        if kind == (1, 0):
            return (_frac(_line_root(candidate.poly, x)), _frac(value))
        if kind == (0, 1):
            return (_frac(value), _frac(_line_root(candidate.poly, y)))
        p = Poly(candidate.poly, x, y)
        den = p.coeff_monomial(x * y) * value + p.coeff_monomial(y)
        if den == 0:
            return None
        num = -(p.coeff_monomial(x) * value + p.coeff_monomial(1))
        return (_frac(value), _frac(Rational(num, den)))
    if e == 1:
        bp = cfg.blowup_point
        if kind == (1, -1):
            return None  # a point of the exceptional line: no chart coordinates
        if kind == (0, 1):
            if value == 0:
                return None  # the point on the exceptional line over the center
            dx, dy = _line_direction(candidate.poly)
            return (_frac(bp[0] + dx * value), _frac(bp[1] + dy * value))
        if kind == (1, 0):
            q0, (dx, dy) = _line_base_and_direction(candidate.poly)
            return (_frac(q0[0] + dx * value), _frac(q0[1] + dy * value))
        if kind == (1, 1):
            grad = tuple(_subs_point(g, bp) for g in _gradient(candidate.poly))
            parts = _centered_forms(candidate.poly, bp)
            K = parts.get(2, sympy.Integer(0))
            kval = _subs_point(K, (Rational(1), value))
            if kval == 0:
                return None
            lval = grad[0] + grad[1] * value
            s = Rational(-lval, kval)
            return (_frac(bp[0] + s), _frac(bp[1] + s * value))
    if e == 2:
        if kind == (1, -2):
            return (_frac(value), Fraction(0))
        if kind == (0, 1):
            return (_frac(_line_root(candidate.poly, x)), _frac(value))
        if kind == (1, 0):
            p = Poly(candidate.poly, y)
            q = p.coeff_monomial(y)
            c = p.coeff_monomial(1)
            qv = q.subs(x, value) if q.free_symbols else q
            if qv == 0:
                return None
            return (_frac(value), _frac(Rational(-c, qv)))
    return None


def is_hyper_bitangent(candidate: ExplicitCurve, cfg: ExplicitConfig) -> HyperBitangencyResult:
    """Whether the candidate meets the boundary curve in at most two points.

    The candidate must be one of the supported smooth rational classes and
    must not share a component with the boundary; the point count is the
    number of distinct geometric points of the intersection with the union
    of the three components, computed on the candidate's parameter line.
    """
    _validate_candidate(candidate, cfg)
    product = _constant_form()
    for comp in cfg.curves:
        form = _pullback(candidate, comp, cfg)
        product = product.multiply(form)
    count = product.distinct_root_count()
    witnesses = _witness_points(candidate, cfg, product.rational_roots())
    return HyperBitangencyResult(candidate, count, count <= 2, witnesses)


# ---------------------------------------------------------------------------
# candidate enumeration
# ---------------------------------------------------------------------------

def _solve_unique_projective(rows: list[list[Rational]], label: str) -> Optional[list[Rational]]:
    """Solve a homogeneous linear system expected to cut out one candidate.

    Returns the coefficient vector when the solution space is a single line,
    None when only the trivial solution exists, and raises when the family
    is positive-dimensional.
    """
    M = sympy.Matrix(rows)
    null = M.nullspace()
    if not null:
        return None
    if len(null) > 1:
        raise DegenerateEnumerationError(f"tangency system for {label} has a solution family")
    vec = null[0]
    denominators = [sympy.Integer(entry.q) for entry in vec]
    scale = sympy.ilcm(*denominators) if denominators else 1
    return [Rational(entry * scale) for entry in vec]


def _tangent_vector(comp: ExplicitCurve, p: tuple[Rational, Rational]) -> tuple[Rational, Rational]:
    gx, gy = (_subs_point(g, p) for g in _gradient(comp.poly))
    return (-gy, gx)


def enumerate_candidates(cfg: ExplicitConfig) -> list[ExplicitCurve]:
    """The finite candidate list dictated by the case classification.

    Rulings/fibers through every intersection point always; the extra
    tangency-constrained family ((1,1) on the product surface, sections on
    F_2) when a component has the minimal class; lines through point pairs
    on F_1.  Candidates are returned unfiltered (one entry per defining
    datum; rulings through several points repeat).
    """
    e = cfg.surface.e
    surface = cfg.surface
    pts = [(_rat(lp.point[0]), _rat(lp.point[1])) for lp in cfg.points]
    labels = [lp.pair for lp in cfg.points]
    out: list[ExplicitCurve] = []

    if e == 0:
        for (a, b) in pts:
            out.append(make_curve(DivisorClass(surface, 1, 0), x - a, label="ruling"))
            out.append(make_curve(DivisorClass(surface, 0, 1), y - b, label="ruling"))
        out.extend(_tangency_family_e0(cfg, pts, labels))
        return out

    if e == 1:
        bp = cfg.blowup_point
        out.append(exceptional_section(surface, bp))
        for (a, b) in pts:
            dx, dy = a - bp[0], b - bp[1]
            line = expand(dy * (x - bp[0]) - dx * (y - bp[1]))
            out.append(make_curve(DivisorClass(surface, 0, 1), line, bp, label="fiber"))
        seen_lines = set()
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                (x1, y1), (x2, y2) = pts[i], pts[j]
                line = expand((y2 - y1) * (x - x1) - (x2 - x1) * (y - y1))
                if _subs_point(line, bp) == 0:
                    continue
                key = _normal_key(line)
                if key in seen_lines:
                    continue
                seen_lines.add(key)
                out.append(make_curve(DivisorClass(surface, 1, 0), line, bp, label="line"))
        return out

    if e == 2:
        out.append(negative_section(surface))
        for (a, _) in pts:
            out.append(make_curve(DivisorClass(surface, 0, 1), x - a, label="fiber"))
        out.extend(_tangency_family_e2(cfg, pts, labels))
        return out

    raise FixtureError(f"enumeration supports e in {{0, 1, 2}}, not e = {e}")


def _pair_partners(labels, pts, i: int):
    """Points of the i-th component paired with each of the other components."""
    with_j: dict[int, list] = {}
    for (pair, p) in zip(labels, pts):
        if i + 1 in pair:
            other = pair[0] + pair[1] - (i + 1)
            with_j.setdefault(other, []).append(p)
    return with_j


def _tangency_family_e0(cfg: ExplicitConfig, pts, labels) -> list[ExplicitCurve]:
    surface = cfg.surface
    out = []
    for i, comp in enumerate(cfg.curves):
        if (comp.cls.u, comp.cls.v) != (1, 1):
            continue
        partners = _pair_partners(labels, pts, i)
        others = sorted(partners)
        if len(others) != 2:
            continue
        j, k = others
        for p in partners[j]:
            for q in partners[k]:
                wj = _tangent_vector(cfg.curves[j - 1], p)
                wk = _tangent_vector(cfg.curves[k - 1], q)
                rows = [
                    [p[0] * p[1], p[0], p[1], Rational(1)],
                    [p[1] * wj[0] + p[0] * wj[1], wj[0], wj[1], Rational(0)],
                    [q[0] * q[1], q[0], q[1], Rational(1)],
                    [q[1] * wk[0] + q[0] * wk[1], wk[0], wk[1], Rational(0)],
                ]
                sol = _solve_unique_projective(rows, f"(1,1) through {p} and {q}")
                if sol is None:
                    continue
                A, B, C, D = sol
                if A * D - B * C == 0:
                    continue  # reducible: no integral curve satisfies the conditions
                expr = expand(A * x * y + B * x + C * y + D)
                out.append(make_curve(DivisorClass(surface, 1, 1), expr, label="tangency"))
    return out


def _tangency_family_e2(cfg: ExplicitConfig, pts, labels) -> list[ExplicitCurve]:
    surface = cfg.surface
    out = []
    for i, comp in enumerate(cfg.curves):
        if (comp.cls.u, comp.cls.v) != (1, 0):
            continue
        partners = _pair_partners(labels, pts, i)
        others = sorted(partners)
        if len(others) != 2:
            continue
        j, k = others
        for p in partners[j]:
            for q in partners[k]:
                wj = _tangent_vector(cfg.curves[j - 1], p)
                wk = _tangent_vector(cfg.curves[k - 1], q)
                rows = []
                for (pt, w) in ((p, wj), (q, wk)):
                    rows.append([Rational(1), pt[1], pt[0] * pt[1], pt[0] ** 2 * pt[1]])
                    rows.append(
                        [
                            Rational(0),
                            w[1],
                            pt[1] * w[0] + pt[0] * w[1],
                            2 * pt[0] * pt[1] * w[0] + pt[0] ** 2 * w[1],
                        ]
                    )
                sol = _solve_unique_projective(rows, f"section through {p} and {q}")
                if sol is None:
                    continue
                c, q0, q1, q2 = sol
                if c == 0:
                    continue  # reducible
                expr = expand(c + (q0 + q1 * x + q2 * x**2) * y)
                out.append(make_curve(DivisorClass(surface, 1, 0), expr, label="tangency"))
    return out


# ---------------------------------------------------------------------------
# end-to-end comparison with the numeric bounds
# ---------------------------------------------------------------------------

_COVERED_SYSTEMS = {
    0: ("(1,0)", "(0,1)", "(1,1)"),
    1: ("C0", "f", "C1"),
    2: ("C0", "f", "C1"),
}


@dataclass(frozen=True)
class CandidateVerdict:
    candidate: ExplicitCurve
    status: str  # "hyper-bitangent" | "excluded" | "shares-component" | "unsupported"
    count: Optional[int] = None

    def to_json(self) -> dict:
        out = {"candidate": str(self.candidate), "status": self.status}
        if self.count is not None:
            out["count"] = self.count
        return out


@dataclass(frozen=True)
class ComparisonRecord:
    """Found hyper-bitangent curves versus the numeric bound for the
    enumerated systems."""

    found_count: int
    covered_bound: int
    within_bound: bool
    n_count: int
    case_label: str
    found: tuple[ExplicitCurve, ...]
    verdicts: tuple[CandidateVerdict, ...]
    report: BoundReport

    def to_json(self) -> dict:
        return {
            "found_count": self.found_count,
            "covered_bound": self.covered_bound,
            "within_bound": self.within_bound,
            "n_count": self.n_count,
            "case_label": self.case_label,
            "found": [c.to_json() for c in self.found],
            "verdicts": [v.to_json() for v in self.verdicts],
            "bound_report": self.report.to_json(),
        }


def verify_bound(cfg: ExplicitConfig, gamma: Optional[int] = None) -> ComparisonRecord:
    """Enumerate candidates, filter by hyper-bitangency, compare with bounds."""
    report = exceptional_set_bound(cfg.numeric, gamma)
    candidates = enumerate_candidates(cfg)
    verdicts: list[CandidateVerdict] = []
    found: list[ExplicitCurve] = []
    seen: set[str] = set()
    for cand in candidates:
        try:
            result = is_hyper_bitangent(cand, cfg)
        except SharedComponentError:
            verdicts.append(CandidateVerdict(cand, "shares-component"))
            continue
        except UnsupportedCandidateError:
            verdicts.append(CandidateVerdict(cand, "unsupported"))
            continue
        if result.is_hyper_bitangent:
            verdicts.append(CandidateVerdict(cand, "hyper-bitangent", result.count))
            if cand.key() not in seen:
                seen.add(cand.key())
                found.append(cand)
        else:
            verdicts.append(CandidateVerdict(cand, "excluded", result.count))
    covered = report.covered_numeric_bound(_COVERED_SYSTEMS[cfg.surface.e])
    return ComparisonRecord(
        found_count=len(found),
        covered_bound=covered,
        within_bound=len(found) <= covered,
        n_count=cfg.numeric.n_count(),
        case_label=report.case_label,
        found=tuple(found),
        verdicts=tuple(verdicts),
        report=report,
    )
