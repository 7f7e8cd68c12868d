"""
Domain exceptions for parameter validation.
"""

from shared.domain.exceptions import DomainValidationError

__all__ = ("ParameterError",)


class ParameterError(DomainValidationError):
    """Raised when a family, order, scale or shift violates its constraints."""
