from hyperzeta.application.queries import SampleMixtureQuery
from hyperzeta.infrastructure.cli.base import BaseCommand, add_family_arguments
from hyperzeta.infrastructure.cli.exit_codes import ExitCode
from hyperzeta.infrastructure.cli.renderers import render_sample
from hyperzeta.infrastructure.cli.schemas import SampleRequest
from shared.application.cqrs import dispatch_query

__all__ = ("SampleCommand",)


class SampleCommand(BaseCommand):
    name = "sample"
    help = "Draw from the weighted sinh or cosh mixture (integer orders)"
    request_schema = SampleRequest

    def add_arguments(self, parser):
        add_family_arguments(parser, with_b=False)
        parser.add_argument("--count", required=True)
        parser.add_argument("--seed", required=True)

    def handle(self, request: SampleRequest) -> ExitCode:
        draws = dispatch_query(
            SampleMixtureQuery(
                family=request.family,
                alpha=request.alpha,
                a=request.a,
                count=request.count,
                seed=request.seed,
            )
        )
        self.write_output(render_sample(draws), request)
        return ExitCode.OK
