"""Exact local analysis of plane-curve germs over the rationals.

A germ is a squarefree bivariate polynomial with rational coefficients
together with a rational base point (translated to the origin internally).
The engine computes multiplicities, local intersection numbers via Fulton's
recursive reduction, blow-up resolution chains, multiplicity sequences,
delta invariants, and the admissible contact orders of a smooth curve with
a unibranch singular point.

All infinitely near points are required to be rational.  When a blow-up has
no rational point over the center the engine raises
:class:`~hirzebruch.errors.IrrationalInfinitelyNearPoint` instead of
extending the field; when several points lie over the center the germ is
not unibranch.

Two independent routes compute local intersection multiplicities: the
primary Fulton reduction (:func:`local_intersection`) and the valuation of
a resultant (:func:`resultant_intersection_oracle`), retained as a
cross-check where it is valid.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import sympy
from sympy import QQ, Poly, Symbol, expand, oo
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

from .errors import (
    GermError,
    IrrationalInfinitelyNearPoint,
    NotSquarefreeError,
    NotUnibranchError,
    SharedComponentError,
    ValidationError,
)

x, y = sympy.symbols("x y")

#: Marker returned by :func:`local_intersection` when the germs share a
#: component through the base point.
INFINITE_INTERSECTION = oo

_PARSE_TRANSFORMS = standard_transformations + (convert_xor, implicit_multiplication_application)

RationalLike = Union[int, Fraction, str, sympy.Rational]


def _to_rational(value: RationalLike) -> sympy.Rational:
    if isinstance(value, sympy.Rational):
        return value
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    if isinstance(value, int):
        return sympy.Rational(value)
    if isinstance(value, str):
        return sympy.Rational(Fraction(value))
    raise GermError(f"not an exact rational: {value!r}")


def parse_germ_poly(text: str) -> sympy.Expr:
    """Parse a polynomial string in ``x, y`` with rational coefficients.

    Accepts signed terms ``c*x^a*y^b`` where ``^`` and ``*`` are optional,
    e.g. ``"y^2 - x^3"`` or ``"3x2y - 1/2"``.
    """
    # a digit directly after a variable is an exponent ("x2" means x^2)
    prepared = re.sub(r"([xy])(\d)", r"\1^\2", text)
    try:
        expr = parse_expr(prepared, local_dict={"x": x, "y": y}, transformations=_PARSE_TRANSFORMS)
    except (SyntaxError, TypeError, sympy.SympifyError) as exc:
        raise GermError(f"cannot parse polynomial {text!r}: {exc}") from exc
    extra = expr.free_symbols - {x, y}
    if extra:
        raise GermError(f"polynomial {text!r} uses symbols other than x, y: {sorted(map(str, extra))}")
    try:
        poly = Poly(expr, x, y, domain=QQ)
    except sympy.PolynomialError as exc:
        raise GermError(f"{text!r} is not a polynomial with rational coefficients: {exc}") from exc
    return poly.as_expr()


def _as_poly_expr(poly: Union[str, sympy.Expr, Poly]) -> sympy.Expr:
    if isinstance(poly, str):
        return parse_germ_poly(poly)
    if isinstance(poly, Poly):
        return poly.as_expr()
    if isinstance(poly, sympy.Expr):
        extra = poly.free_symbols - {x, y}
        if extra:
            raise GermError(f"polynomial uses symbols other than x, y: {sorted(map(str, extra))}")
        try:
            return Poly(poly, x, y, domain=QQ).as_expr()
        except sympy.PolynomialError as exc:
            raise GermError(f"not a polynomial over the rationals: {exc}") from exc
    raise GermError(f"cannot interpret {poly!r} as a bivariate polynomial")


def _is_squarefree(expr: sympy.Expr) -> bool:
    g = sympy.gcd(sympy.gcd(expr, sympy.diff(expr, x)), sympy.diff(expr, y))
    return sympy.total_degree(g) == 0


@dataclass(frozen=True)
class PlaneCurveGerm:
    """A squarefree curve germ at a rational base point.

    The defining polynomial is translated so that the base point sits at the
    origin; ``local_poly`` is that translated polynomial and every internal
    computation happens at the origin.
    """

    local_poly: sympy.Expr
    base_point: tuple[Fraction, Fraction]

    def __init__(self, poly: Union[str, sympy.Expr, Poly], base_point=(0, 0)):
        expr = _as_poly_expr(poly)
        if expr == 0:
            raise GermError("germ polynomial must be nonzero")
        px, py = (_to_rational(c) for c in base_point)
        local = expand(expr.subs({x: x + px, y: y + py}, simultaneous=True))
        if local.subs({x: 0, y: 0}) != 0:
            raise GermError(f"polynomial does not vanish at base point ({px}, {py})")
        if not _is_squarefree(local):
            raise NotSquarefreeError("germ polynomial has a repeated factor")
        object.__setattr__(self, "local_poly", local)
        object.__setattr__(
            self,
            "base_point",
            (Fraction(int(px.p), int(px.q)), Fraction(int(py.p), int(py.q))),
        )

    def __str__(self) -> str:
        return f"germ[{self.local_poly} at {self.base_point}]"


# ---------------------------------------------------------------------------
# basic local data
# ---------------------------------------------------------------------------

def _poly_terms(expr: sympy.Expr) -> list[tuple[tuple[int, int], sympy.Rational]]:
    return list(Poly(expr, x, y, domain=QQ).terms())


def _mult_of(expr: sympy.Expr) -> int:
    return min(i + j for (i, j), _ in _poly_terms(expr))


def _leading_form(expr: sympy.Expr) -> sympy.Expr:
    m = _mult_of(expr)
    return sympy.Add(*[c * x**i * y**j for (i, j), c in _poly_terms(expr) if i + j == m])


def mult_at(germ: PlaneCurveGerm) -> int:
    """Multiplicity of the germ at its base point (lowest total degree)."""
    return _mult_of(germ.local_poly)


# ---------------------------------------------------------------------------
# local intersection multiplicity (Fulton reduction + resultant oracle)
# ---------------------------------------------------------------------------

def _ord_univariate(expr: sympy.Expr, gen: Symbol) -> int:
    p = Poly(expr, gen)
    return min(m[0] for m in p.monoms())


def _exact_quo(num: sympy.Expr, den: sympy.Expr) -> sympy.Expr:
    q, r = sympy.div(num, den, x, y)
    assert r == 0, "exact polynomial division failed"
    return expand(q)


def _fulton(F: sympy.Expr, G: sympy.Expr) -> int:
    """Intersection number of F, G at the origin; gcd(F, G) must be trivial
    at the origin (callers divide out global common factors first)."""
    total = 0
    fuel = 4 * (sympy.total_degree(F) + sympy.total_degree(G) + 2) ** 2
    while True:
        fuel -= 1
        assert fuel > 0, "Fulton reduction failed to terminate"
        if F.subs({x: 0, y: 0}) != 0 or G.subs({x: 0, y: 0}) != 0:
            return total
        f = expand(F.subs(y, 0))
        g = expand(G.subs(y, 0))
        if f == 0 and g == 0:
            # y divides both: common component, excluded by the caller
            raise SharedComponentError("germs share the component y = 0")
        if f == 0:
            # F = y * H; I(y, G) is the x-order of G(x, 0)
            total += _ord_univariate(g, x)
            F = _exact_quo(F, y)
            continue
        if g == 0:
            F, G = G, F
            continue
        r = sympy.degree(f, x)
        s = sympy.degree(g, x)
        if r > s:
            F, G = G, F
            f, g, r, s = g, f, s, r
        a = sympy.LC(Poly(f, x))
        b = sympy.LC(Poly(g, x))
        G = expand(a * G - b * x ** (s - r) * F)


def _split_common_factor(A: sympy.Expr, B: sympy.Expr):
    """Return (A', B', through_origin) with the global gcd removed."""
    g = sympy.gcd(A, B)
    if sympy.total_degree(g) == 0:
        return A, B, False
    if g.subs({x: 0, y: 0}) == 0:
        return A, B, True
    return _exact_quo(A, g), _exact_quo(B, g), False


def local_intersection(a: PlaneCurveGerm, b: PlaneCurveGerm):
    """Local intersection multiplicity of two germs at their common base point.

    Computed by Fulton's recursive reduction over exact rationals.  Returns
    :data:`INFINITE_INTERSECTION` when the germs share a component through
    the point.
    """
    if a.base_point != b.base_point:
        raise ValidationError(
            f"germs have different base points: {a.base_point} vs {b.base_point}"
        )
    A, B, shared = _split_common_factor(a.local_poly, b.local_poly)
    if shared:
        return INFINITE_INTERSECTION
    return _fulton(A, B)


def resultant_intersection_oracle(a: PlaneCurveGerm, b: PlaneCurveGerm):
    """Independent oracle: the x-order of ``res_y`` of the two local polynomials.

    Valid when the line ``x = 0`` meets the common zero locus only at the
    origin and the leading y-coefficients do not both vanish at ``x = 0``
    (see :func:`resultant_oracle_is_valid`).
    """
    if a.base_point != b.base_point:
        raise ValidationError("germs have different base points")
    R = expand(sympy.resultant(a.local_poly, b.local_poly, y))
    if R == 0:
        return INFINITE_INTERSECTION
    if R.subs(x, 0) != 0:
        return 0
    return _ord_univariate(R, x)


def resultant_oracle_is_valid(a: PlaneCurveGerm, b: PlaneCurveGerm) -> bool:
    """Whether the resultant valuation equals the local intersection number.

    Requires: on the line ``x = 0`` the only common root is ``y = 0``, and
    at least one of the leading y-coefficients is nonzero at ``x = 0``.
    """
    A, B = a.local_poly, b.local_poly
    fa = expand(A.subs(x, 0))
    fb = expand(B.subs(x, 0))
    if fa == 0 or fb == 0:
        return False
    # common roots on x=0 must all be y=0, i.e. the gcd is c*y^k
    g = sympy.gcd(fa, fb)
    if len(Poly(g, y).monoms()) > 1:
        return False
    lca = Poly(A, y).LC()
    lcb = Poly(B, y).LC()
    if expand(lca.subs(x, 0) if lca.free_symbols else lca) == 0 and expand(
        lcb.subs(x, 0) if lcb.free_symbols else lcb
    ) == 0:
        return False
    return True


# ---------------------------------------------------------------------------
# blow-up resolution chain
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultiplicitySequence:
    """Multiplicities of the strict transforms along a minimal resolution chain.

    Entries are non-increasing positive integers ending in 1; for a smooth
    germ the sequence is ``(1,)``.
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValidationError("multiplicity sequence must be nonempty")
        if self.entries[-1] != 1:
            raise ValidationError("multiplicity sequence must end in 1")
        if any(m < 1 for m in self.entries):
            raise ValidationError("multiplicity sequence entries must be positive")
        if any(a < b for a, b in zip(self.entries, self.entries[1:])):
            raise ValidationError("multiplicity sequence must be non-increasing")

    def l_index(self) -> int:
        """Index of the first entry smaller than the initial multiplicity.

        By convention the sequence ``(1,)`` has index 0.
        """
        m0 = self.entries[0]
        if m0 == 1:
            return 0
        return next(i for i, m in enumerate(self.entries) if m < m0)

    def delta(self) -> int:
        return sum(m * (m - 1) // 2 for m in self.entries)


@dataclass(frozen=True)
class ResolutionNode:
    """One step of the chain: the followed strict transform and its multiplicity.

    ``local_poly`` is centered at the followed point; ``chart`` records which
    standard blow-up chart was used to reach it ('origin' for the root node).
    """

    local_poly: sympy.Expr
    multiplicity: int
    chart: str


def _dirs_over_center(leading: sympy.Expr):
    """Distinct tangent directions of a leading form.

    Returns ``(count, direction)`` where ``direction`` is the pair ``(cx, cy)``
    of the unique reduced linear factor when ``count == 1`` (None otherwise),
    plus the number of those directions that are rational.
    """
    g = sympy.gcd(sympy.gcd(leading, sympy.diff(leading, x)), sympy.diff(leading, y))
    reduced = _exact_quo(leading, g) if sympy.total_degree(g) > 0 else leading
    count = sympy.total_degree(reduced)
    if count == 1:
        p = Poly(reduced, x, y)
        cx = p.coeff_monomial(x)
        cy = p.coeff_monomial(y)
        return 1, (cx, cy), 1
    rational = 0
    for factor, _ in sympy.factor_list(reduced)[1]:
        if sympy.total_degree(factor) == 1:
            rational += 1
    return count, None, rational


def _blow_up_step(P: sympy.Expr, m: int) -> ResolutionNode:
    """Blow up the origin and follow the unique point of the strict transform.

    Raises :class:`NotUnibranchError` when several points lie over the
    center, or :class:`IrrationalInfinitelyNearPoint` when none of them is
    rational.
    """
    leading = _leading_form(P)
    count, direction, rational = _dirs_over_center(leading)
    if count >= 2:
        if rational == 0:
            raise IrrationalInfinitelyNearPoint(
                "strict transform has no rational point over the center"
            )
        raise NotUnibranchError("several points of the strict transform lie over the center")
    cx, cy = direction
    if cy != 0:
        # tangent line cx*x + cy*y = 0; follow t = -cx/cy in the x-chart
        t0 = sympy.Rational(-cx, cy) if cy != 0 else None
        transformed = expand(P.subs(y, x * (y + t0)))
        strict = _exact_quo(transformed, x**m)
        chart = "x"
    else:
        # vertical tangent x = 0; follow the origin of the y-chart
        transformed = expand(P.subs(x, x * y))
        strict = _exact_quo(transformed, y**m)
        chart = "y"
    return ResolutionNode(strict, _mult_of(strict), chart)


def _local_branch_poly(germ: PlaneCurveGerm) -> sympy.Expr:
    """Drop rational factors that do not vanish at the origin; raise when two
    or more rational factors do (the germ then has several branches)."""
    _, factors = sympy.factor_list(germ.local_poly)
    vanishing = [f for f, _ in factors if f.subs({x: 0, y: 0}) == 0]
    if len(vanishing) > 1:
        raise NotUnibranchError("germ factors over the rationals into several branches")
    assert vanishing, "germ vanishes at the origin, so some factor must"
    return expand(vanishing[0])


def resolution_chain(germ: PlaneCurveGerm) -> list[ResolutionNode]:
    """Blow-up chain of the (unibranch) germ until the tracked point is smooth."""
    P = _local_branch_poly(germ)
    nodes = [ResolutionNode(P, _mult_of(P), "origin")]
    fuel = (sympy.total_degree(P) + 2) ** 2 + 8
    while nodes[-1].multiplicity > 1:
        fuel -= 1
        assert fuel > 0, "resolution chain failed to terminate"
        node = nodes[-1]
        nodes.append(_blow_up_step(node.local_poly, node.multiplicity))
    return nodes


def is_unibranch(germ: PlaneCurveGerm) -> bool:
    """Whether exactly one point of the resolution tree lies over the base
    point at every blow-up stage."""
    try:
        resolution_chain(germ)
    except NotUnibranchError:
        return False
    return True


def multiplicity_sequence(germ: PlaneCurveGerm) -> MultiplicitySequence:
    """The multiplicity sequence of a unibranch germ (ends with 1)."""
    try:
        nodes = resolution_chain(germ)
    except NotUnibranchError as exc:
        raise NotUnibranchError(f"germ is not unibranch: {exc}") from exc
    return MultiplicitySequence(tuple(node.multiplicity for node in nodes))


def delta_invariant(germ: PlaneCurveGerm) -> int:
    """Delta invariant of a unibranch germ: sum of m(m-1)/2 over the chain."""
    return multiplicity_sequence(germ).delta()


def l_index(seq: MultiplicitySequence) -> int:
    """First index where the sequence drops below its initial entry."""
    return seq.l_index()


# ---------------------------------------------------------------------------
# contact-order theorems
# ---------------------------------------------------------------------------

def fz_admissible_set(seq: MultiplicitySequence) -> set[int]:
    """Admissible contact orders of a smooth curve with a unibranch point.

    For initial multiplicity ``m >= 2`` and drop index ``l`` the possible
    orders are ``k*m`` for ``1 <= k <= l`` together with ``l*m + m_l``.
    """
    m = seq.entries[0]
    if m < 2:
        raise ValidationError("admissible-contact set requires multiplicity at least 2")
    l = seq.l_index()
    return {k * m for k in range(1, l + 1)} | {l * m + seq.entries[l]}


def delta_lower_bound(m: int, bc: int) -> int:
    """Lower bound ``((m-1)(bc-1) + gcd(bc, m) - 1) / 2`` for the delta invariant.

    ``m`` is the multiplicity of the unibranch point and ``bc`` the local
    intersection with a curve smooth there; equality holds whenever
    ``gcd(bc, m) = 1``.  A smooth curve meets an m-fold point with
    multiplicity at least m, so ``bc < m`` is rejected.
    """
    if m < 1:
        raise ValidationError("multiplicity must be positive")
    if bc < m:
        raise ValidationError(
            f"contact order {bc} below multiplicity {m}: a smooth curve meets an "
            f"m-fold point with multiplicity at least m"
        )
    num = (m - 1) * (bc - 1) + math.gcd(bc, m) - 1
    assert num % 2 == 0
    return num // 2


def _normalized(expr: sympy.Expr) -> sympy.Expr:
    return Poly(expr, x, y, domain=QQ).monic().as_expr()


def normalized_intersection_ratios(
    a: PlaneCurveGerm, b: PlaneCurveGerm, c: PlaneCurveGerm
) -> tuple[Fraction, Fraction, Fraction]:
    """The three ratios (X.Y) / (mult X * mult Y) over all pairs, unsorted."""
    germs = (a, b, c)
    for g in germs:
        if not is_unibranch(g):
            raise NotUnibranchError(f"{g} is not unibranch at the base point")
    for i in range(3):
        for j in range(i + 1, 3):
            if _normalized(germs[i].local_poly) == _normalized(germs[j].local_poly):
                raise ValidationError("germs must be pairwise distinct")
    mults = [mult_at(g) for g in germs]
    ratios = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        inter = local_intersection(germs[i], germs[j])
        if inter == INFINITE_INTERSECTION:
            raise SharedComponentError("germs share a component through the base point")
        ratios.append(Fraction(inter, mults[i] * mults[j]))
    return tuple(ratios)


def strong_triangle_check(a: PlaneCurveGerm, b: PlaneCurveGerm, c: PlaneCurveGerm) -> bool:
    """Whether the two smallest normalized pairwise intersection ratios agree."""
    ratios = sorted(normalized_intersection_ratios(a, b, c))
    return ratios[0] == ratios[1]


def mn_point_invariance_check(m: int, n: int, b: PlaneCurveGerm) -> bool:
    """Contact-order invariance at an (m, n)-point with ``m < n < 2m``.

    ``b`` must be smooth at the origin and tangent to ``y^m - x^n`` there
    (tangent line ``y = 0``); the check returns whether the contact order
    with the cusp equals ``n``.
    """
    if not (2 <= m < n < 2 * m):
        raise ValidationError("requires 2 <= m < n < 2m")
    if b.base_point != (Fraction(0), Fraction(0)):
        raise ValidationError("b must be a germ at the origin")
    if _mult_of(b.local_poly) != 1:
        raise ValidationError("b must be smooth at the origin")
    linear = _leading_form(b.local_poly)
    if Poly(linear, x, y).coeff_monomial(x) != 0:
        raise ValidationError("b must be tangent to the cusp (tangent line y = 0)")
    cusp = PlaneCurveGerm(y**m - x**n)
    return local_intersection(b, cusp) == n
