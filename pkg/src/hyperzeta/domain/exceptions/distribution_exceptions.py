"""
Domain exceptions for hyperbolic distributions.
"""

from shared.domain.exceptions import (
    DomainComputationError,
    DomainSingularityError,
    DomainValidationError,
)

__all__ = (
    "UnsupportedFamilyError",
    "SingularPointError",
    "SlowDecayError",
    "NonIntegerOrderError",
    "DensityInversionError",
)


class UnsupportedFamilyError(DomainValidationError):
    """Raised when an operation is not available for the requested family or order."""


class SingularPointError(DomainSingularityError):
    """Raised when a density is evaluated where it is unbounded."""


class SlowDecayError(DomainValidationError):
    """Raised when a characteristic function decays too slowly to be inverted."""


class NonIntegerOrderError(DomainValidationError):
    """Raised when an integer order is required (tanh family, sampling)."""


class DensityInversionError(DomainComputationError):
    """Raised when a numerically inverted density is significantly negative."""
