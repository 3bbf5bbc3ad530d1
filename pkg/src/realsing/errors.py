"""Exception types shared across the package."""


class InvalidParameters(ValueError):
    """Raised when user supplied exponents violate a precondition."""


class SeifertConstructionError(ValueError):
    """Raised when a Seifert pair cannot be built (non-invertible residue)."""


class InternalConsistencyError(AssertionError):
    """Raised when two independent computations of the same quantity disagree.

    This signals a bug, never a property of the input data.
    """
