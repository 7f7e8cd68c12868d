from hyperzeta.application.queries import PoleReportQuery
from hyperzeta.infrastructure.cli.base import BaseCommand, add_family_arguments
from hyperzeta.infrastructure.cli.exit_codes import ExitCode
from hyperzeta.infrastructure.cli.renderers import render_poles
from hyperzeta.infrastructure.cli.schemas import PolesRequest
from shared.application.cqrs import dispatch_query

__all__ = ("PolesCommand",)


class PolesCommand(BaseCommand):
    name = "poles"
    help = "List the poles and residues of the sinh-moment function"
    request_schema = PolesRequest

    def add_arguments(self, parser):
        add_family_arguments(parser, family_default="sinh")
        parser.add_argument(
            "--n-max", help="for non-integer orders, list beta - n for n = 0..n-max"
        )
        parser.add_argument("--format", choices=("json", "csv"), help="default: json")

    def handle(self, request: PolesRequest) -> ExitCode:
        poles = dispatch_query(
            PoleReportQuery(
                alpha=request.alpha,
                a=request.a,
                b=request.b,
                n_max=request.n_max,
                family=request.family,
                abs_tol=request.abs_tol,
                rel_tol=request.rel_tol,
            )
        )
        self.write_output(render_poles(poles, request.format), request)
        return ExitCode.OK
