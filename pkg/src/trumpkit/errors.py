"""Exception types shared across the package."""


class TrumpkitError(ValueError):
    """Base class for every domain error raised by this package."""


class AllZero(TrumpkitError):
    """Every entry of the raw vector is zero, so there is nothing to scale."""


class NegativeEntry(TrumpkitError):
    """A vector entry is negative."""


class TargetTooSmall(TrumpkitError):
    """Requested padding dimension is smaller than the current dimension."""


class DimensionMismatch(TrumpkitError):
    """Operands must have equal dimension; pad explicitly before comparing."""


class NotMajorized(TrumpkitError):
    """An operation required one vector to majorize another and it does not."""


class NotUseful(TrumpkitError):
    """Catalysts cannot enlarge the reachable set for this target vector."""


class PreconditionViolated(TrumpkitError):
    """An interiority precondition failed; the message lists which ones."""


class UniformCatalyst(TrumpkitError):
    """All nonzero components are equal; such a catalyst never helps."""


class NotStrict(TrumpkitError):
    """A prefix gap is zero, so no interior radius exists."""


class NotNormalizable(TrumpkitError):
    """Rounding could not be repaired into an exact probability vector."""
