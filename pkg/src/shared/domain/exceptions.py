"""
Domain base exceptions.
"""

__all__ = (
    "DomainException",
    "DomainValidationError",
    "DomainComputationError",
    "DomainSingularityError",
)


class DomainException(Exception):
    """
    Base exception for domain-related errors.
    """


class DomainValidationError(DomainException):
    """
    Raised when validation fails.

    When to use: When an argument violates a precondition (out-of-range
    parameters, unsupported families, points outside a convergence region).
    Where to use: In value objects and at the entry of domain services.
    """


class DomainComputationError(DomainException):
    """
    Raised when a numerical procedure cannot deliver its contract.

    When to use: When refinement limits are hit, an integral diverges or two
    independent evaluations of the same quantity disagree.
    Where to use: In domain services performing quadrature or summation.
    Difference from ValidationError: the inputs were legal, the computation was not.
    """


class DomainSingularityError(DomainException):
    """
    Raised when a function is evaluated on one of its singular points.

    When to use: Poles of gamma factors, poles of zeta functions and points
    where a density is unbounded.
    Where to use: In domain services before evaluating near a known singularity.
    """
