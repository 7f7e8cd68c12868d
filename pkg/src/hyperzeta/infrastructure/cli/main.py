"""
Entry point of the ``hyperzeta`` command.

Exit codes: 0 success, 1 computation failure or failed self-check, 2 invalid
flags, 3 invalid parameters, 4 evaluation at a pole. Every failure writes one
JSON line to standard error.
"""

import logging
import logging.config
import sys
from typing import Sequence, TextIO

from config import settings
from hyperzeta.infrastructure.cli.base import CommandParser, UsageError
from hyperzeta.infrastructure.cli.commands import COMMANDS
from hyperzeta.infrastructure.cli.exit_codes import ExitCode, exit_code_for
from hyperzeta.infrastructure.cli.renderers import render_error
from shared.application.exceptions import ApplicationError

__all__ = ("build_parser", "main")

logger = logging.getLogger(__name__)


def build_parser(stdout: TextIO, stderr: TextIO) -> CommandParser:
    parser = CommandParser(
        prog="hyperzeta",
        description="Sinh, cosh and tanh moment multiple zeta functions",
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True, parser_class=CommandParser)
    for command_class in COMMANDS:
        command_class(stdout, stderr).create_parser(subparsers)
    return parser


def main(
    argv: Sequence[str] | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr

    logging.config.dictConfig(settings.LOGGING)
    # registers the query handlers on the global bus
    import hyperzeta.application.cqrs_services  # noqa: F401

    parser = build_parser(stdout, stderr)
    try:
        options = vars(parser.parse_args(argv))
        options.pop("subcommand")
        command = options.pop("command")
        return int(command.execute(options))

    except UsageError as e:
        stderr.write(render_error(e.message, ExitCode.USAGE, e.details))
        return ExitCode.USAGE
    except ApplicationError as e:
        code = exit_code_for(e)
        stderr.write(render_error(e.message, code, e.details))
        return code
    except OSError as e:
        stderr.write(render_error(f"cannot write output: {e}", ExitCode.FAILURE))
        return ExitCode.FAILURE
    except SystemExit as e:
        # --help and --version
        return e.code if isinstance(e.code, int) else ExitCode.OK


if __name__ == "__main__":
    sys.exit(main())
