"""Exact model of the Picard lattice of a Hirzebruch surface.

The surface ``F_e`` (``e >= 0``) has Picard group ``Z*C1 + Z*f`` where ``C1``
is a section class with ``C1^2 = e`` and ``f`` is the fiber class with
``f^2 = 0`` and ``C1.f = 1``.  The negative section is ``C0 = C1 - e*f``;
the canonical class is ``K = -2*C1 + (e-2)*f``.

A divisor class is an integer pair ``(u, v)`` in the ``{C1, f}`` basis and
carries its surface, since the pairing depends on ``e``.  Everything here is
a pure function of immutable values over exact integers and rationals; no
floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NoIntegralMemberError, SurfaceMismatchError, ValidationError


@dataclass(frozen=True)
class SurfaceModel:
    """The Hirzebruch surface ``F_e``, determined by its index ``e >= 0``."""

    e: int

    def __post_init__(self) -> None:
        if not isinstance(self.e, int) or self.e < 0:
            raise ValidationError(f"Hirzebruch index must be a non-negative integer, got {self.e!r}")

    def canonical_class(self) -> "DivisorClass":
        """The canonical class ``K = -2*C1 + (e-2)*f``."""
        return DivisorClass(self, -2, self.e - 2)

    def fiber_class(self) -> "DivisorClass":
        return DivisorClass(self, 0, 1)

    def c1_class(self) -> "DivisorClass":
        return DivisorClass(self, 1, 0)

    def c0_class(self) -> "DivisorClass":
        """The negative-section class ``C0 = C1 - e*f`` (equal to ``C1`` when e=0)."""
        return DivisorClass(self, 1, -self.e)

    def __str__(self) -> str:
        return f"F_{self.e}"


@dataclass(frozen=True)
class DivisorClass:
    """An element ``u*C1 + v*f`` of ``Pic(F_e)``."""

    surface: SurfaceModel
    u: int
    v: int

    def __post_init__(self) -> None:
        if not isinstance(self.u, int) or not isinstance(self.v, int):
            raise ValidationError(f"divisor coefficients must be integers, got ({self.u!r}, {self.v!r})")

    # -- lattice arithmetic -------------------------------------------------

    def _require_same_surface(self, other: "DivisorClass") -> None:
        if self.surface != other.surface:
            raise SurfaceMismatchError(
                f"classes live on different surfaces: {self.surface} vs {other.surface}"
            )

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._require_same_surface(other)
        return DivisorClass(self.surface, self.u + other.u, self.v + other.v)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._require_same_surface(other)
        return DivisorClass(self.surface, self.u - other.u, self.v - other.v)

    def __mul__(self, n: int) -> "DivisorClass":
        if not isinstance(n, int):
            return NotImplemented
        return DivisorClass(self.surface, n * self.u, n * self.v)

    __rmul__ = __mul__

    def intersect(self, other: "DivisorClass") -> int:
        """Intersection pairing: bilinear extension of ``C1^2=e``, ``C1.f=1``, ``f^2=0``."""
        self._require_same_surface(other)
        e = self.surface.e
        return self.u * other.u * e + self.u * other.v + self.v * other.u

    # -- positivity predicates ----------------------------------------------

    def is_effective(self) -> bool:
        """True iff ``u >= 0`` and ``u*e + v >= 0``."""
        return self.u >= 0 and self.u * self.surface.e + self.v >= 0

    def is_ample(self) -> bool:
        """True iff ``u > 0`` and ``v > 0`` (equivalently, very ample)."""
        return self.u > 0 and self.v > 0

    def has_integral_member(self) -> bool:
        """Whether the linear system contains an integral curve.

        The classes are the fiber ``(0, 1)``, the negative section ``(1, -e)``,
        and everything with ``u > 0`` and ``v >= 0``.
        """
        if (self.u, self.v) == (0, 1):
            return True
        if (self.u, self.v) == (1, -self.surface.e):
            return True
        return self.u > 0 and self.v >= 0

    def is_big(self) -> bool:
        """True iff ``u > 0`` and ``u*e + v > 0`` (positive volume)."""
        return self.u > 0 and self.u * self.surface.e + self.v > 0

    def log_canonical_is_big(self) -> bool:
        """Whether ``K + D`` is big, with ``D`` this class."""
        return (self.surface.canonical_class() + self).is_big()

    # -- numeric invariants ---------------------------------------------------

    def h0(self) -> int:
        """Dimension of the space of global sections.

        For ``e = 0`` this is ``(u+1)(v+1)``; for ``e >= 1`` it is the sum of
        ``u*e + v - i*e + 1`` over ``0 <= i <= min(u, floor((u*e+v)/e))``.
        Non-effective classes return 0 (no higher cohomology is modelled,
        which matches the volume-limit use).
        """
        if not self.is_effective():
            return 0
        e, u, v = self.surface.e, self.u, self.v
        if e == 0:
            return (u + 1) * (v + 1)
        upper = min(u, (u * e + v) // e)
        return sum(u * e + v - i * e + 1 for i in range(upper + 1))

    def arithmetic_genus(self) -> int:
        """Arithmetic genus of an integral member: ``(u-1)(e*u + 2v - 2)/2``."""
        if not self.has_integral_member():
            raise NoIntegralMemberError(f"class ({self.u}, {self.v}) on {self.surface} has no integral member")
        e, u, v = self.surface.e, self.u, self.v
        num = (u - 1) * (e * u + 2 * v - 2)
        assert num % 2 == 0
        return num // 2

    def volume(self) -> Fraction:
        """Volume of the class, an exact rational.

        ``2uv`` for ``e = 0``; ``2uv + e*u^2`` for ``e >= 1, u > 0, v >= 0``;
        ``(u*e + v)^2 / e`` for ``e >= 1, u > 0, v < 0``; and 0 for
        non-effective classes or fiber multiples.
        """
        if not self.is_effective():
            return Fraction(0)
        e, u, v = self.surface.e, self.u, self.v
        if e == 0:
            return Fraction(2 * u * v)
        if u == 0:
            return Fraction(0)
        if v >= 0:
            return Fraction(2 * u * v + e * u * u)
        return Fraction((u * e + v) ** 2, e)

    def unibranch_mult_upper_bound(self, on_c0: bool) -> int:
        """Upper bound for the multiplicity of a unibranch point of an integral member.

        ``min(u, v)`` on ``F_0``; for ``e >= 1`` the bound is ``min(u, v)``
        at points of the negative section and ``u`` elsewhere.  On ``F_1``
        the classes ``u*C1`` with ``u >= 2`` (pullbacks of plane curves)
        satisfy the strict bound ``u - 1`` at every point.
        """
        if not self.has_integral_member():
            raise NoIntegralMemberError(f"class ({self.u}, {self.v}) has no integral member")
        e = self.surface.e
        if (self.u, self.v) == (0, 1):
            raise ValidationError("multiplicity bound is not defined for the fiber class")
        if (self.u, self.v) == (1, -e):
            raise ValidationError("multiplicity bound is not defined for the negative-section class")
        if e == 1 and self.v == 0 and self.u >= 2:
            return self.u - 1
        if e == 0:
            return min(self.u, self.v)
        if on_c0:
            return min(self.u, self.v)
        return self.u

    def __str__(self) -> str:
        return f"({self.u}, {self.v})"
