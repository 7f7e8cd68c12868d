"""
Base classes of the subcommands.

A subcommand declares its flags, a request schema and ``handle``; the base
validates the parsed flags against the schema and owns output writing.
"""

import argparse
import logging
from abc import ABC, abstractmethod
from typing import Any, TextIO

from pydantic import ValidationError

from hyperzeta.infrastructure.cli.exit_codes import ExitCode
from hyperzeta.infrastructure.cli.schemas import CliRequest

__all__ = (
    "UsageError",
    "CommandParser",
    "BaseCommand",
    "add_family_arguments",
)

logger = logging.getLogger(__name__)


class UsageError(Exception):
    """Invalid flags; reported with exit code 2."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        self.message = message
        self.details = details or {}
        super().__init__(message)


class CommandParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of printing usage and exiting."""

    def error(self, message: str):
        raise UsageError(message, details={"prog": self.prog})


def add_family_arguments(
    parser: argparse.ArgumentParser, family_default: str | None = None, with_b: bool = True
) -> None:
    parser.add_argument(
        "--family",
        choices=("sinh", "cosh", "tanh"),
        default=family_default,
        required=family_default is None,
        help="moment family" + (f" (default: {family_default})" if family_default else ""),
    )
    parser.add_argument("--alpha", required=True, help="orders, comma separated, e.g. 1,0.5")
    parser.add_argument("--a", required=True, help="scales, comma separated, e.g. 1,2")
    if with_b:
        parser.add_argument("--b", required=True, help="shift b > 0")


class BaseCommand(ABC):
    name: str = ""
    help: str = ""
    request_schema: type[CliRequest] = CliRequest

    def __init__(self, stdout: TextIO, stderr: TextIO) -> None:
        self.stdout = stdout
        self.stderr = stderr

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Entry point for subclassed commands to add custom arguments."""

    def create_parser(self, subparsers) -> argparse.ArgumentParser:
        parser = subparsers.add_parser(self.name, help=self.help, description=self.help)
        self.add_arguments(parser)
        parser.add_argument("--abs-tol", help="absolute tolerance override (tighten only)")
        parser.add_argument("--rel-tol", help="relative tolerance override (tighten only)")
        parser.add_argument("--output", help="write to this file instead of standard output")
        parser.set_defaults(command=self)
        return parser

    def validate(self, options: dict[str, Any]) -> CliRequest:
        # unset flags fall back to the schema defaults
        present = {key: value for key, value in options.items() if value is not None}
        try:
            return self.request_schema.model_validate(present)
        except ValidationError as e:
            problems = [
                f"{'.'.join(str(part) for part in error['loc']) or 'request'}: {error['msg']}"
                for error in e.errors()
            ]
            raise UsageError("; ".join(problems), details={"command": self.name}) from e

    @abstractmethod
    def handle(self, request: CliRequest) -> ExitCode:
        """The actual logic of the command. Subclasses must implement this method."""

    def execute(self, options: dict[str, Any]) -> ExitCode:
        request = self.validate(options)
        logger.debug(f"running {self.name} with {request!r}")
        return self.handle(request)

    def write_output(self, text: str, request: CliRequest) -> None:
        if request.output is not None:
            request.output.write_text(text, encoding="utf-8")
        else:
            self.stdout.write(text)
