"""
Shared application exceptions.
"""

from typing import Any

__all__ = (
    "ApplicationError",
    "ApplicationValidationError",
    "ApplicationConfigurationError",
    "ApplicationComputationError",
    "ApplicationSingularityError",
)


class ApplicationError(Exception):
    """Base exception for application layer errors."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)


class ApplicationValidationError(ApplicationError):
    """Exception raised when there's a validation error."""


class ApplicationConfigurationError(ApplicationError):
    """Exception raised when there's a configuration error."""


class ApplicationComputationError(ApplicationError):
    """Exception raised when a numerical computation failed."""


class ApplicationSingularityError(ApplicationError):
    """Exception raised when a value was requested at a singular point."""
