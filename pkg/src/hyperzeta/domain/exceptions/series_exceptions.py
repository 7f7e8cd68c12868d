"""
Domain exceptions for direct summation.
"""

from shared.domain.exceptions import DomainComputationError, DomainValidationError

__all__ = (
    "ConvergenceRegionError",
    "TailToleranceError",
)


class ConvergenceRegionError(DomainValidationError):
    """Raised when s lies outside the half-plane where the series is summed."""


class TailToleranceError(DomainComputationError):
    """Raised when the truncated series tail bound exceeds the allowed tolerance."""

    def __init__(self, message: str, tail_bound: float) -> None:
        super().__init__(message)
        self.tail_bound = tail_bound
        self.details = {"tail_bound": tail_bound}
