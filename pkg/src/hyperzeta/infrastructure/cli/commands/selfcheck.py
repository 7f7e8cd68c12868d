from hyperzeta.application.queries import SelfCheckQuery
from hyperzeta.infrastructure.cli.base import BaseCommand
from hyperzeta.infrastructure.cli.exit_codes import ExitCode
from hyperzeta.infrastructure.cli.renderers import render_selfcheck
from hyperzeta.infrastructure.cli.schemas import SelfCheckRequest
from shared.application.cqrs import dispatch_query

__all__ = ("SelfCheckCommand",)


def _tightest(*values: float | None) -> float | None:
    given = [value for value in values if value is not None]
    return min(given) if given else None


class SelfCheckCommand(BaseCommand):
    name = "selfcheck"
    help = "Run the self-check suite and print a pass/fail table"
    request_schema = SelfCheckRequest

    def add_arguments(self, parser):
        parser.add_argument("--fast", action="store_true", default=None, help="quick subset")
        parser.add_argument(
            "--tol", help="quadrature tolerance override; never loosens the check thresholds"
        )
        parser.add_argument("--only", help="comma separated check names")

    def handle(self, request: SelfCheckRequest) -> ExitCode:
        report = dispatch_query(
            SelfCheckQuery(
                fast=request.fast,
                abs_tol=_tightest(request.tol, request.abs_tol),
                rel_tol=_tightest(request.tol, request.rel_tol),
                only=request.only,
            )
        )
        self.write_output(render_selfcheck(report.checks), request)
        return ExitCode.OK if report.passed else ExitCode.FAILURE
