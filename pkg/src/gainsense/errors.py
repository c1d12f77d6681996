"""Exception types shared across the package.

All of them derive from ValueError so callers that only care about
"bad input" can catch one base class.
"""


class NonPositiveValueError(ValueError):
    """A linear-scale quantity had to be strictly positive."""


class DistanceTooSmallError(ValueError):
    """Link distance below the path-loss model's validity floor."""


class InvalidRadiusError(ValueError):
    """Coverage radius at or below the minimum model distance."""


class ZeroFadingError(ValueError):
    """Fading power was zero or negative."""


class EmptySampleSetError(ValueError):
    """An operation needed at least one SNR sample."""


class NegativeRatioError(ValueError):
    """Fading-power ratio cannot be negative."""


class InvalidThetaError(ValueError):
    """Outage-probability target outside the open interval (0, 1)."""


class NegativeInterferenceError(ValueError):
    """Interference power cannot be negative."""
