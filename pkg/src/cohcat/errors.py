"""Exception types raised by the public operations."""

from __future__ import annotations


class CohcatError(Exception):
    """Base class for all package-specific errors."""


class AllZeroError(CohcatError):
    """Every supplied weight is zero; no state can be normalized."""


class EpsOutOfRangeError(CohcatError):
    """A perturbation or smoothing parameter lies outside (0, 1)."""


class DimTooSmallError(CohcatError):
    """Requested padding dimension is below the current dimension."""


class ZeroEntryInSourceError(CohcatError):
    """The strict catalytic criterion needs a full-support source."""


class IdenticalStatesError(CohcatError):
    """The strict catalytic criterion is undefined for identical states."""


class DimensionBlowupError(CohcatError):
    """A tensor-power search would exceed the configured size cap."""


class EpsTooLargeError(CohcatError):
    """A component split would remove at least the whole last entry."""


class MarginalMismatchError(CohcatError):
    """Supplied marginals disagree with the ones computed from the joint."""


class DimensionMismatchError(CohcatError):
    """Operator or state dimensions are inconsistent."""


class NotMajorizedError(CohcatError):
    """Deterministic channel synthesis needs the source majorized by the target."""


class InvalidChannelError(CohcatError):
    """The Kraus set fails completeness or incoherence verification."""
