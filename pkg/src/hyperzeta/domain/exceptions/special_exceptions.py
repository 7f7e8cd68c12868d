"""
Domain exceptions for gamma-type special functions.
"""

from shared.domain.exceptions import DomainSingularityError, DomainValidationError

__all__ = (
    "PoleError",
    "BranchCutError",
    "ZeroBaseError",
    "IntegerArgumentError",
)


class PoleError(DomainSingularityError):
    """Raised when a gamma factor is evaluated at one of its poles."""

    def __init__(self, message: str, location: complex | None = None) -> None:
        super().__init__(message)
        self.location = location
        self.details = {} if location is None else {"pole": str(location)}


class BranchCutError(DomainValidationError):
    """Raised when a principal power is requested on the negative real axis."""


class ZeroBaseError(DomainValidationError):
    """Raised when a complex power has a zero base."""


class IntegerArgumentError(DomainValidationError):
    """Raised when a formula reserved for non-integer arguments gets an integer."""
