"""
Domain exceptions for numerical integration.
"""

from typing import TYPE_CHECKING

from shared.domain.exceptions import DomainComputationError

if TYPE_CHECKING:
    from hyperzeta.domain.entities import QuadResult

__all__ = (
    "MaxDepthError",
    "DivergenceError",
)


class MaxDepthError(DomainComputationError):
    """
    Raised when adaptive refinement reached its depth limit before meeting the
    requested tolerance. The best available estimate is kept on ``result``.
    """

    def __init__(self, message: str, result: "QuadResult") -> None:
        super().__init__(message)
        self.result = result
        self.details = {"err_estimate": result.err_estimate}


class DivergenceError(DomainComputationError):
    """Raised when an integrand is not integrable or a tail does not decay."""
