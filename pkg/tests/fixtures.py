"""Shared explicit fixtures for the verifier and CLI tests.

All fixtures are engineered so that every pairwise intersection point is
rational and transverse: grid-style components (products of rulings) make
rationality automatic on the product surface, and the remaining curves are
chosen through prescribed rational points.
"""

from __future__ import annotations

import functools

import sympy
from sympy import expand

from hirzebruch.lattice import DivisorClass, SurfaceModel
from hirzebruch.verifier import ExplicitConfig, make_curve, x, y


@functools.lru_cache(maxsize=None)
def product_surface_three_diagonal_config() -> ExplicitConfig:
    """Three (1,1)-curves on the product surface with six rational crossings.

    The third curve is the unique (1,1)-curve through (2, 1/2), (3, 3) and
    (0, 5); passing through one rational point of each quadric forces the
    second intersection point to be rational as well.
    """
    s = SurfaceModel(0)
    c1 = make_curve(DivisorClass(s, 1, 1), x * y - 1, label="B1")
    c2 = make_curve(DivisorClass(s, 1, 1), y - x, label="B2")
    c3 = make_curve(
        DivisorClass(s, 1, 1), -19 * x * y + 77 * x + 30 * y - 150, label="B3"
    )
    return ExplicitConfig([c1, c2, c3])


@functools.lru_cache(maxsize=None)
def product_surface_bitangent_diagonal_config() -> ExplicitConfig:
    """Three (1,1)-curves admitting an honest hyper-bitangent (1,1)-curve.

    The second and third components are tangent to the diagonal ``y = x`` at
    (1, 1) and (-1, -1), and the first passes through both points; the
    diagonal therefore meets the union in exactly two points and must be
    produced by the tangency enumeration.
    """
    s = SurfaceModel(0)
    b1 = make_curve(DivisorClass(s, 1, 1), x * y - 1, label="B1")
    b2 = make_curve(DivisorClass(s, 1, 1), x * y + x - 3 * y + 1, label="B2")
    b3 = make_curve(DivisorClass(s, 1, 1), 2 * x * y + 5 * x - y + 2, label="B3")
    return ExplicitConfig([b1, b2, b3])


@functools.lru_cache(maxsize=None)
def product_surface_33_config() -> ExplicitConfig:
    """A transverse rational configuration of type (3,3)^3 with |N| = 54.

    Two components are unions of three vertical and three horizontal rulings
    (so their crossings form rational grids); the third is a product of
    three hyperbola-type (1,1)-curves, which meet every ruling in a single
    rational point.
    """
    s = SurfaceModel(0)

    def ruling_product(xs, ys):
        out = sympy.Integer(1)
        for a in xs:
            out *= x - a
        for b in ys:
            out *= y - b
        return expand(out)

    b1 = make_curve(DivisorClass(s, 3, 3), ruling_product((1, 2, 3), (1, 2, 3)), label="B1")
    b2 = make_curve(DivisorClass(s, 3, 3), ruling_product((4, 5, 6), (4, 5, 6)), label="B2")
    b3 = make_curve(
        DivisorClass(s, 3, 3),
        expand(((x - 10) * (y - 10) - 1) * ((x - 11) * (y - 11) - 2) * ((x - 12) * (y - 12) - 3)),
        label="B3",
    )
    return ExplicitConfig([b1, b2, b3])


@functools.lru_cache(maxsize=None)
def product_surface_one_diagonal_config() -> ExplicitConfig:
    """One (1,1)-component next to two ruling-product (2,2)-components.

    The hyperbola meets every ruling line in one rational point, so all
    sixteen crossings are rational; only the smallest component admits the
    tangency-constrained candidate family.
    """
    s = SurfaceModel(0)

    def ruling_product(xs, ys):
        out = sympy.Integer(1)
        for a in xs:
            out *= x - a
        for b in ys:
            out *= y - b
        return expand(out)

    b1 = make_curve(DivisorClass(s, 1, 1), x * y - 1, label="B1")
    b2 = make_curve(DivisorClass(s, 2, 2), ruling_product((4, 6), (4, 6)), label="B2")
    b3 = make_curve(DivisorClass(s, 2, 2), ruling_product((8, 9), (8, 9)), label="B3")
    return ExplicitConfig([b1, b2, b3])


@functools.lru_cache(maxsize=None)
def f1_two_lines_conic_config() -> ExplicitConfig:
    """On F_1 (blow-up point at the origin): two lines avoiding the origin
    and a smooth conic through it; classes (1,0), (1,0), (1,1)."""
    s = SurfaceModel(1)
    bp = (0, 0)
    b1 = make_curve(DivisorClass(s, 1, 0), x + y - 3, bp, label="B1")
    b2 = make_curve(DivisorClass(s, 1, 0), x - y + 4, bp, label="B2")
    b3 = make_curve(DivisorClass(s, 1, 1), y - x**2 - x, bp, label="B3")
    return ExplicitConfig([b1, b2, b3])


@functools.lru_cache(maxsize=None)
def f2_three_sections_config() -> ExplicitConfig:
    """Three sections of class (1,0) on F_2 with all six crossings rational.

    The sections are ``1 + q_i(x) * y`` with ``q_2 - q_1 = x^2 - 1``,
    ``q_3 - q_1 = 2(x^2 - 25)`` and ``q_3 - q_2 = x^2 - 49``, so the pairs
    cross over ``x = ±1, ±5, ±7``.
    """
    s = SurfaceModel(2)
    b1 = make_curve(DivisorClass(s, 1, 0), 1 + (x**2 + 2) * y, label="B1")
    b2 = make_curve(DivisorClass(s, 1, 0), 1 + (2 * x**2 + 1) * y, label="B2")
    b3 = make_curve(DivisorClass(s, 1, 0), 1 + (3 * x**2 - 48) * y, label="B3")
    return ExplicitConfig([b1, b2, b3])
