"""
Process exit codes and the mapping from application errors.
"""

from enum import IntEnum

from shared.application.exceptions import (
    ApplicationError,
    ApplicationSingularityError,
    ApplicationValidationError,
)

__all__ = ("ExitCode", "exit_code_for")


class ExitCode(IntEnum):
    OK = 0
    FAILURE = 1
    USAGE = 2
    VALIDATION = 3
    SINGULARITY = 4


def exit_code_for(error: ApplicationError) -> ExitCode:
    if isinstance(error, ApplicationSingularityError):
        return ExitCode.SINGULARITY
    if isinstance(error, ApplicationValidationError):
        return ExitCode.VALIDATION
    return ExitCode.FAILURE
