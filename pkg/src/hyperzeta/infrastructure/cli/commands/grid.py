from hyperzeta.application.queries import GridSweepQuery
from hyperzeta.infrastructure.cli.base import BaseCommand, add_family_arguments
from hyperzeta.infrastructure.cli.exit_codes import ExitCode
from hyperzeta.infrastructure.cli.renderers import render_grid
from hyperzeta.infrastructure.cli.schemas import GridRequest
from shared.application.cqrs import dispatch_query

__all__ = ("GridCommand",)


class GridCommand(BaseCommand):
    name = "grid"
    help = "Tabulate a moment zeta function over a rectangle of the complex plane"
    request_schema = GridRequest

    def add_arguments(self, parser):
        add_family_arguments(parser)
        for axis in ("re", "im"):
            parser.add_argument(f"--{axis}-min", required=True)
            parser.add_argument(f"--{axis}-max", required=True)
            parser.add_argument(f"--{axis}-step", required=True)
        parser.add_argument(
            "--mode",
            choices=("auto", "series", "integral", "mellin", "verify"),
            help="evaluation path (default: integral)",
        )
        parser.add_argument("--workers", help="parallel evaluations (default: HYPERZETA_WORKERS)")
        parser.add_argument("--format", choices=("json", "csv"), help="default: csv")

    def handle(self, request: GridRequest) -> ExitCode:
        points = dispatch_query(
            GridSweepQuery(
                family=request.family,
                alpha=request.alpha,
                a=request.a,
                b=request.b,
                re_min=request.re_min,
                re_max=request.re_max,
                re_step=request.re_step,
                im_min=request.im_min,
                im_max=request.im_max,
                im_step=request.im_step,
                mode=request.mode,
                workers=request.workers,
                abs_tol=request.abs_tol,
                rel_tol=request.rel_tol,
            )
        )
        self.write_output(render_grid(points, request.format), request)
        return ExitCode.OK
