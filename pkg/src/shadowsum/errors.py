"""Exception types shared across the package."""


class ShadowsumError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(ShadowsumError):
    """Input file is structurally invalid (bad JSON, NaN, non-closing loop, ...)."""


class InvariantViolation(ShadowsumError):
    """A structural invariant of a link or shadow does not hold."""


class PreconditionError(ShadowsumError):
    """An operation was called on input outside its stated domain."""


class DegenerateGeometry(ShadowsumError):
    """Non-generic planar input: vertex on a foreign segment, overlapping or
    grazing segments.  Such inputs are rejected, never perturbed."""


class PointOnCurve(ShadowsumError):
    """Winding-number query point lies on the projected curve."""


class HasDoublePoints(PreconditionError):
    """Operation requires a projection with no double points."""


class HasVertices(PreconditionError):
    """Operation requires a vertex-free shadow."""


class TangentialCrossing(ShadowsumError):
    """The circle coordinate touches the reference angle without crossing it."""


class NonTransverse(ShadowsumError):
    """Projected curves meet non-transversally, or strands share a circle
    coordinate at a crossing."""


class NotNullHomologous(PreconditionError):
    """Loop has nonzero circle winding where a null-homologous loop is required."""


class OffsetTooLarge(ShadowsumError):
    """Requested push-off offset exceeds the admissibility threshold or
    produces a self-intersecting offset curve."""


class ColorOutOfRange(ShadowsumError):
    """Color is not a member of the level's color set."""


class MissingGleams(ShadowsumError):
    """Shadow face lacks the gleam required by the state sum."""


class UnsupportedColor(PreconditionError):
    """The pair-sum route only supports the fundamental color 1/2."""
