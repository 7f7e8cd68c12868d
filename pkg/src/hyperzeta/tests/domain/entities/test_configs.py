"""Test quadrature and summation configurations."""

from typing import Callable

import pytest

from config import settings
from hyperzeta.domain.entities import QuadConfig, SeriesConfig
from hyperzeta.domain.exceptions import ParameterError


@pytest.mark.unit
@pytest.mark.domain
class TestQuadConfig:
    """Test quadrature configuration"""

    def test_default_reads_settings(self) -> None:
        """Test default values come from settings"""

        # Act
        cfg = QuadConfig.default()

        # Assert
        assert cfg.abs_tol == settings.ABS_TOL
        assert cfg.rel_tol == settings.REL_TOL
        assert cfg.max_depth == settings.MAX_DEPTH
        assert cfg.nodes_per_panel == 15

    def test_tightened_never_loosens(self, quad_config: QuadConfig) -> None:
        """Test tolerance overrides only tighten"""

        # Act
        looser = quad_config.tightened(abs_tol=1e-2, rel_tol=1e-2)
        tighter = quad_config.tightened(abs_tol=1e-13)

        # Assert
        assert looser == quad_config, "a looser override should be ignored"
        assert tighter.abs_tol == 1e-13
        assert tighter.rel_tol == quad_config.rel_tol

    def test_replace(self, quad_config: QuadConfig) -> None:
        # Act
        wide = quad_config.replace(initial_radius=16.0)

        # Assert
        assert wide.initial_radius == 16.0
        assert wide.abs_tol == quad_config.abs_tol

    @pytest.mark.parametrize(
        "changes",
        [
            {"abs_tol": 0.0},
            {"rel_tol": -1.0},
            {"max_depth": 0},
            {"nodes_per_panel": 21},
            {"initial_radius": float("nan")},
        ],
    )
    def test_invalid_values(self, quad_config: QuadConfig, changes: dict) -> None:
        with pytest.raises(ParameterError):
            quad_config.replace(**changes)


@pytest.mark.unit
@pytest.mark.domain
class TestSeriesConfig:
    """Test summation configuration"""

    def test_cutoff_defaults_per_dimension(self, series_config: SeriesConfig) -> None:
        # Assert
        assert series_config.cutoff_for(1) == settings.CUTOFF_R1
        assert series_config.cutoff_for(2) == settings.CUTOFF_R2
        assert series_config.cutoff_for(3) == settings.CUTOFF_R3

    def test_explicit_cutoff_wins(
        self, series_config_factory: Callable[..., SeriesConfig]
    ) -> None:
        # Act
        cfg = series_config_factory(dim_cutoff=50)

        # Assert
        assert cfg.cutoff_for(1) == 50
        assert cfg.cutoff_for(3) == 50

    def test_four_dimensions_have_no_default(self, series_config: SeriesConfig) -> None:
        with pytest.raises(ParameterError):
            series_config.cutoff_for(4)

    def test_with_expectation_cfg(
        self, series_config: SeriesConfig, quad_config: QuadConfig
    ) -> None:
        # Arrange
        tight = quad_config.tightened(abs_tol=1e-12)

        # Act
        cfg = series_config.with_expectation_cfg(tight)

        # Assert
        assert cfg.expectation_cfg == tight
        assert cfg.tail_tol == series_config.tail_tol
