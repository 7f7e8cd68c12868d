"""
Domain exceptions for zeta function evaluation.
"""

from typing import Any

from shared.domain.exceptions import DomainComputationError, DomainSingularityError

__all__ = (
    "AtPoleError",
    "DisagreementError",
)


class AtPoleError(DomainSingularityError):
    """Raised when s is within the pole radius of a pole of the sinh family."""

    def __init__(self, message: str, pole: float, residue: float | None) -> None:
        super().__init__(message)
        self.pole = pole
        self.residue = residue
        self.details = {"pole": pole, "residue": residue}


class DisagreementError(DomainComputationError):
    """Raised when independent evaluation paths disagree beyond their error bounds."""

    def __init__(self, message: str, details: dict[str, Any]) -> None:
        super().__init__(message)
        self.details = details
