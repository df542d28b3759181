"""Exception hierarchy shared by the lattice, germ, bound and verifier layers.

Errors split into two families: *validation* errors (the input violates a
documented precondition or invariant) and *computational* errors (the input
is well formed but the requested computation leaves the supported domain,
e.g. an infinitely near point that is not rational).  The CLI maps the two
families to distinct exit codes.
"""


class HirzebruchError(Exception):
    """Base class for all package errors."""


class ValidationError(HirzebruchError):
    """An input violates a documented precondition or invariant."""


class ComputationalError(HirzebruchError):
    """The computation leaves the supported exact-rational domain."""


# -- lattice ---------------------------------------------------------------

class SurfaceMismatchError(ValidationError):
    """Two divisor classes living on different Hirzebruch surfaces."""


class NoIntegralMemberError(ValidationError):
    """Operation requires a class with an integral member."""


# -- germs -----------------------------------------------------------------

class GermError(ValidationError):
    """Malformed curve germ (zero, not vanishing at base point, ...)."""


class NotSquarefreeError(GermError):
    """Germ polynomial has a repeated factor."""


class NotUnibranchError(ValidationError):
    """Operation requires a unibranch germ."""


class IrrationalInfinitelyNearPoint(ComputationalError):
    """The resolution chain requires a point outside the rationals."""


class SharedComponentError(ValidationError):
    """Two curves share a component (local intersection is infinite)."""


# -- bounds ----------------------------------------------------------------

class ConfigError(ValidationError):
    """A three-component configuration violates a standing assumption."""


class HypothesisNotMetError(ValidationError):
    """A case-analysis hypothesis fails (carries marker ``hypothesis-not-met``)."""


# -- verifier --------------------------------------------------------------

class FixtureError(ValidationError):
    """An explicit fixture violates a verifier invariant."""


class TangentialContact(FixtureError):
    """Two components meet non-transversally (normal crossing fails)."""


class TriplePoint(FixtureError):
    """All three components pass through one point."""


class IrrationalIntersectionPoint(ComputationalError):
    """A pairwise intersection point could not be located over the rationals."""


class UnsupportedCandidateError(ValidationError):
    """Candidate curve outside the verifier's supported (smooth, low-class) scope."""


class DegenerateEnumerationError(ComputationalError):
    """A tangency linear system has a positive-dimensional solution family."""
