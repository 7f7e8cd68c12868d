"""
hyperzeta related fixtures.
"""

from typing import Callable, Sequence

import pytest

from hyperzeta.application.queries import EvaluateZetaQuery, GridSweepQuery
from hyperzeta.domain.entities import Family, MixtureSpec, QuadConfig, SeriesConfig, ZetaParams


@pytest.fixture
def quad_config() -> QuadConfig:
    """Default quadrature configuration."""

    return QuadConfig.default()


@pytest.fixture
def loose_quad_config() -> QuadConfig:
    """Quadrature configuration for tests that only need a few digits."""

    return QuadConfig.default().replace(abs_tol=1e-8, rel_tol=1e-8)


@pytest.fixture
def series_config_factory(quad_config: QuadConfig) -> Callable[..., SeriesConfig]:
    """Series configuration factory."""

    def _create_series_config(**kwargs) -> SeriesConfig:  # type: ignore
        return SeriesConfig(
            dim_cutoff=kwargs.get("dim_cutoff"),
            tail_tol=kwargs.get("tail_tol", 1e-2),
            expectation_cfg=kwargs.get("expectation_cfg", quad_config),
        )

    return _create_series_config


@pytest.fixture
def series_config(series_config_factory: Callable[..., SeriesConfig]) -> SeriesConfig:
    return series_config_factory()


@pytest.fixture
def params_factory() -> Callable[..., ZetaParams]:
    """Zeta parameter factory; defaults to the Hurwitz case a = 1, alpha = 1, b = 1."""

    def _create_params(**kwargs) -> ZetaParams:  # type: ignore
        family = kwargs.get("family", Family.SINH)
        if isinstance(family, str):
            family = Family.from_string(family)
        alpha: Sequence[float] = kwargs.get("alpha", [1.0])
        return ZetaParams(
            family=family,
            alpha=alpha,
            a=kwargs.get("a", [1.0] * len(alpha)),
            b=kwargs.get("b", 1.0),
        )

    return _create_params


@pytest.fixture
def hurwitz_params(params_factory: Callable[..., ZetaParams]) -> ZetaParams:
    """Sinh family with a = 1, alpha = 1, b = 1: the Riemann zeta function."""

    return params_factory()


@pytest.fixture
def eta_params(params_factory: Callable[..., ZetaParams]) -> ZetaParams:
    """Cosh family with a = 1, alpha = 1, b = 1: the Dirichlet eta function."""

    return params_factory(family=Family.COSH)


@pytest.fixture
def tanh_params(params_factory: Callable[..., ZetaParams]) -> ZetaParams:
    return params_factory(family=Family.TANH)


@pytest.fixture
def mixture_factory() -> Callable[..., MixtureSpec]:
    """Mixture factory; components are (a_j, alpha_j) pairs."""

    def _create_mixture(**kwargs) -> MixtureSpec:  # type: ignore
        family = kwargs.get("family", Family.SINH)
        return MixtureSpec(family, kwargs.get("components", [(1.0, 1.0)]))

    return _create_mixture


@pytest.fixture
def handler_configs(quad_config: QuadConfig) -> dict[str, object]:
    """Keyword arguments for constructing zeta query handlers directly."""

    return {"quad_config": quad_config, "series_config": SeriesConfig.default(quad_config)}


@pytest.fixture
def evaluate_query_factory() -> Callable[..., EvaluateZetaQuery]:
    """Evaluation query factory; defaults to the Riemann zeta function at s = 2."""

    def _create_query(**kwargs) -> EvaluateZetaQuery:  # type: ignore
        return EvaluateZetaQuery(
            family=kwargs.get("family", "sinh"),
            alpha=kwargs.get("alpha", [1.0]),
            a=kwargs.get("a", [1.0]),
            b=kwargs.get("b", 1.0),
            s=kwargs.get("s", 2.0),
            mode=kwargs.get("mode", "integral"),
            abs_tol=kwargs.get("abs_tol"),
            rel_tol=kwargs.get("rel_tol"),
        )

    return _create_query


@pytest.fixture
def grid_query_factory() -> Callable[..., GridSweepQuery]:
    """Grid query factory; a 3 x 3 grid around the pole of the Riemann zeta function."""

    def _create_query(**kwargs) -> GridSweepQuery:  # type: ignore
        return GridSweepQuery(
            family=kwargs.get("family", "sinh"),
            alpha=kwargs.get("alpha", [1.0]),
            a=kwargs.get("a", [1.0]),
            b=kwargs.get("b", 1.0),
            re_min=kwargs.get("re_min", 0.5),
            re_max=kwargs.get("re_max", 1.5),
            re_step=kwargs.get("re_step", 0.5),
            im_min=kwargs.get("im_min", -0.5),
            im_max=kwargs.get("im_max", 0.5),
            im_step=kwargs.get("im_step", 0.5),
            mode=kwargs.get("mode", "integral"),
            workers=kwargs.get("workers", 2),
        )

    return _create_query
