from hyperzeta.application.queries import EvaluateZetaQuery
from hyperzeta.infrastructure.cli.base import BaseCommand, add_family_arguments
from hyperzeta.infrastructure.cli.exit_codes import ExitCode
from hyperzeta.infrastructure.cli.renderers import render_evaluation
from hyperzeta.infrastructure.cli.schemas import EvalRequest
from shared.application.cqrs import dispatch_query

__all__ = ("EvalCommand",)


class EvalCommand(BaseCommand):
    name = "eval"
    help = "Evaluate one moment zeta function at one point s"
    request_schema = EvalRequest

    def add_arguments(self, parser):
        add_family_arguments(parser)
        parser.add_argument(
            "--s",
            required=True,
            help='point "re", "re+imi" or "re-imi"; write --s=-1+2i when re is negative',
        )
        parser.add_argument(
            "--mode",
            choices=("auto", "series", "integral", "mellin", "verify"),
            help="evaluation path (default: auto)",
        )
        parser.add_argument("--format", choices=("json", "csv"), help="default: json")

    def handle(self, request: EvalRequest) -> ExitCode:
        result = dispatch_query(
            EvaluateZetaQuery(
                family=request.family,
                alpha=request.alpha,
                a=request.a,
                b=request.b,
                s=request.s,
                mode=request.mode,
                abs_tol=request.abs_tol,
                rel_tol=request.rel_tol,
            )
        )
        self.write_output(render_evaluation(result, request.format), request)
        return ExitCode.OK
