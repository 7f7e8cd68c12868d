"""
Zeta Query Handlers for CQRS implementation
"""

from __future__ import annotations

import logging
import math

from injector import inject

from config import settings
from hyperzeta.application.dtos import EvaluationDTO, GridPointDTO, PoleDTO
from hyperzeta.application.mappers import (
    EvaluationDTOMapper,
    GridPointDTOMapper,
    PoleDTOMapper,
)
from hyperzeta.application.queries import (
    EvaluateZetaQuery,
    GridSweepQuery,
    PoleReportQuery,
)
from hyperzeta.domain.entities import (
    EvalMode,
    Family,
    QuadConfig,
    SeriesConfig,
    ZetaParams,
)
from hyperzeta.domain.exceptions import ParameterError
from hyperzeta.domain.services import zetacore
from shared.application.cqrs import QueryHandler
from shared.application.exception_mapper import map_domain_exception_to_application
from shared.application.exceptions import ApplicationError
from shared.domain.exceptions import DomainException, DomainSingularityError
from shared.infrastructure.utils.executor import map_ordered

__all__ = (
    "EvaluateZetaQueryHandler",
    "PoleReportQueryHandler",
    "GridSweepQueryHandler",
)

logger = logging.getLogger(__name__)

FLAG_NEAR_POLE = "near-pole"
FLAG_ERROR = "error"


class BaseZetaQueryHandler:
    """Base class for zeta query handlers with common functionalities."""

    @inject
    def __init__(self, quad_config: QuadConfig, series_config: SeriesConfig) -> None:
        self.quad_config = quad_config
        self.series_config = series_config

    def configs_for(self, query) -> tuple[QuadConfig, SeriesConfig]:
        """Injected configurations with the query's tolerance overrides, tighten only."""

        quad_config = self.quad_config.tightened(abs_tol=query.abs_tol, rel_tol=query.rel_tol)
        return quad_config, self.series_config.with_expectation_cfg(quad_config)

    @staticmethod
    def build_params(query) -> ZetaParams:
        return ZetaParams(Family.from_string(query.family), query.alpha, query.a, query.b)


class EvaluateZetaQueryHandler(
    QueryHandler[EvaluateZetaQuery, EvaluationDTO], BaseZetaQueryHandler
):
    """Handle EvaluateZeta query."""

    def handle(self, query: EvaluateZetaQuery) -> EvaluationDTO:
        try:
            params = self.build_params(query)
            quad_config, series_config = self.configs_for(query)
            result = zetacore.dispatch(
                params, query.s, EvalMode.from_string(query.mode), quad_config, series_config
            )
            return EvaluationDTOMapper.to_dto(result)

        except DomainException as e:
            raise map_domain_exception_to_application(
                e, details={"s": str(complex(query.s))}
            ) from e
        except Exception as e:
            raise ApplicationError(
                f"Failed to evaluate at s={query.s}: {e}",
                details={"s": str(complex(query.s))},
            ) from e


class PoleReportQueryHandler(
    QueryHandler[PoleReportQuery, list[PoleDTO]], BaseZetaQueryHandler
):
    """Handle PoleReport query."""

    def handle(self, query: PoleReportQuery) -> list[PoleDTO]:
        try:
            params = self.build_params(query)
            quad_config, _ = self.configs_for(query)
            report = zetacore.poles_S(params, query.n_max, quad_config)
            return PoleDTOMapper.list_to_dto(report)

        except DomainException as e:
            raise map_domain_exception_to_application(e) from e
        except Exception as e:
            raise ApplicationError(f"Failed to build the pole report: {e}") from e


def _axis(lower: float, upper: float, step: float, name: str) -> list[float]:
    """Inclusive arithmetic progression; points are rounded to 12 decimals."""
    if not (math.isfinite(lower) and math.isfinite(upper)) or upper < lower:
        raise ParameterError(f"{name} bounds must satisfy min <= max, got [{lower}, {upper}]")
    if not (math.isfinite(step) and step > 0):
        raise ParameterError(f"{name} step must be positive, got {step}")
    count = math.floor((upper - lower) / step + 1e-9) + 1
    return [round(lower + i * step, 12) for i in range(count)]


class GridSweepQueryHandler(
    QueryHandler[GridSweepQuery, list[GridPointDTO]], BaseZetaQueryHandler
):
    """
    Handle GridSweep query.

    Rows come in row-major order, real part outer and imaginary part inner,
    whatever order the workers finish in.
    """

    def handle(self, query: GridSweepQuery) -> list[GridPointDTO]:
        try:
            params = self.build_params(query)
            quad_config, series_config = self.configs_for(query)
            mode = EvalMode.from_string(query.mode)
            re_axis = _axis(query.re_min, query.re_max, query.re_step, "re")
            im_axis = _axis(query.im_min, query.im_max, query.im_step, "im")
            if len(re_axis) * len(im_axis) > settings.MAX_GRID_POINTS:
                raise ParameterError(
                    f"grid has {len(re_axis) * len(im_axis)} points, "
                    f"limit is {settings.MAX_GRID_POINTS}"
                )
        except DomainException as e:
            raise map_domain_exception_to_application(e) from e

        points = [complex(re, im) for re in re_axis for im in im_axis]

        def evaluate(s: complex) -> GridPointDTO:
            try:
                result = zetacore.dispatch(params, s, mode, quad_config, series_config)
                return GridPointDTOMapper.to_dto(s, result)
            except DomainSingularityError as e:
                return GridPointDTOMapper.flagged(s, FLAG_NEAR_POLE, str(e))
            except DomainException as e:
                logger.warning(f"grid point {s} failed: {e}")
                return GridPointDTOMapper.flagged(s, FLAG_ERROR, str(e))

        logger.debug(f"sweeping {len(points)} grid points")
        return map_ordered(evaluate, points, max_workers=query.workers)
