"""Exception types shared across the package."""


class OrigamiError(Exception):
    """Base class for all package-specific errors."""


class BackendMismatchError(OrigamiError):
    """Raised when two scalars from incompatible backends are combined."""


class NonInvertibleError(OrigamiError, ZeroDivisionError):
    """Raised when inverting a zero scalar."""


class ParallelLinesError(OrigamiError):
    """Raised when intersecting two lines with equal directions mod sign."""


class PrecisionError(OrigamiError):
    """Raised when an interval computation cannot certify a result."""


class CapExceededError(OrigamiError):
    """Raised when an enumeration exceeds its configured budget.

    Carries the partial result computed so far in ``partial``.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class UnsupportedConfigurationError(OrigamiError):
    """Raised when an operation is asked about a configuration it does not cover."""


class ScalingProjectionNotFoundError(OrigamiError):
    """Raised when no projection value in (0, 1) exists within the search tiers."""
