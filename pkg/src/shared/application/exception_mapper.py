"""
Exception mapping utility for transforming Domain exceptions to Application exceptions.

This module provides utilities to map domain layer exceptions to appropriate
application layer exceptions, maintaining proper exception hierarchy and context.
"""

from typing import Any

from shared.application.exceptions import (
    ApplicationComputationError,
    ApplicationError,
    ApplicationSingularityError,
    ApplicationValidationError,
)
from shared.domain.exceptions import (
    DomainComputationError,
    DomainException,
    DomainSingularityError,
    DomainValidationError,
)

__all__ = ("map_domain_exception_to_application",)


# Mapping dictionary: Domain Exception → Application Exception class
DOMAIN_TO_APPLICATION_EXCEPTION_MAP = {
    DomainValidationError: ApplicationValidationError,
    DomainComputationError: ApplicationComputationError,
    DomainSingularityError: ApplicationSingularityError,
}


def map_domain_exception_to_application(
    domain_exception: DomainException,
    message: str | None = None,
    details: dict[str, Any] | None = None,
) -> ApplicationError:
    """
    Map a Domain exception to the corresponding Application exception.

    Mapping rules:
    - DomainValidationError → ApplicationValidationError
    - DomainComputationError → ApplicationComputationError
    - DomainSingularityError → ApplicationSingularityError
    - Other DomainException → ApplicationError (generic)

    Exceptions exposing a ``details`` mapping (for example the pole location
    and residue of an at-pole error) contribute it to the application error;
    explicit ``details`` win on key collisions.

    Example:
        try:
            result = zetacore.eval_S(params, s, cfg)
        except AtPoleError as e:
            raise map_domain_exception_to_application(
                e, message="s is a pole", details={"s": str(s)}
            ) from e
    """
    app_exception_class = None

    # Check the exception type and its MRO (Method Resolution Order) to find a match
    for exc_type in type(domain_exception).__mro__:
        if exc_type in DOMAIN_TO_APPLICATION_EXCEPTION_MAP:
            app_exception_class = DOMAIN_TO_APPLICATION_EXCEPTION_MAP[exc_type]
            break

    # Fallback to generic ApplicationError if no specific mapping found
    if app_exception_class is None:
        app_exception_class = ApplicationError

    exception_message = message if message is not None else str(domain_exception)

    merged_details = dict(getattr(domain_exception, "details", None) or {})
    merged_details.update(details or {})
    merged_details.setdefault("kind", type(domain_exception).__name__)

    return app_exception_class(message=exception_message, details=merged_details)
