"""Exception types shared across the package."""

from __future__ import annotations


class LaminationError(Exception):
    """Base class for every error raised by this package."""


class ShapeError(LaminationError, ValueError):
    """Structurally malformed value: wrong length, wrong type, out-of-range
    configuration (``n < 2``, negative counts, bad seed)."""


class EmptyLaminationError(LaminationError, ValueError):
    """The all-zero vector or census, which encodes no curves at all."""


class ExcludedVectorError(LaminationError, ValueError):
    """Coordinate vector with ``c <= 0`` but a nonzero twist; no multicurve
    has parallel copies of the core curve together with twisting strands."""


class InvalidVectorError(LaminationError, ValueError):
    """Intersection vector that fails validation.  Carries the report."""

    def __init__(self, report):
        self.report = report
        first = report.first
        detail = f": {first.condition}: {first.detail}" if first else ""
        super().__init__(f"invalid intersection vector{detail}")


class TwistSignError(LaminationError, ValueError):
    """Twist direction argument inconsistent with the vector's twist content."""


class CensusError(LaminationError, ValueError):
    """Component census that violates a census invariant."""


class CensusConsistencyError(CensusError):
    """Component census whose per-region counts cannot be glued into one
    multicurve (ladder or endpoint mismatch)."""


class GenerationFailure(LaminationError, RuntimeError):
    """Random census generation exhausted its retry budget."""
