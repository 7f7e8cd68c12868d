"""
Tolerance and truncation policies of the two evaluation engines.
"""

import math
from typing import Any

from config import settings
from hyperzeta.domain.exceptions import ParameterError
from shared.domain.entities import ValueObject

__all__ = ("QuadConfig", "SeriesConfig", "SUPPORTED_PANEL_RULES")

# embedded Gauss/Kronrod pairs available to the panel integrator
SUPPORTED_PANEL_RULES = (15,)


class QuadConfig(ValueObject):
    def __init__(
        self,
        abs_tol: float,
        rel_tol: float,
        max_depth: int,
        nodes_per_panel: int,
        initial_radius: float,
    ) -> None:
        if not (math.isfinite(abs_tol) and abs_tol > 0):
            raise ParameterError(f"abs_tol must be positive, got {abs_tol}")
        if not (math.isfinite(rel_tol) and rel_tol > 0):
            raise ParameterError(f"rel_tol must be positive, got {rel_tol}")
        if int(max_depth) < 1:
            raise ParameterError(f"max_depth must be at least 1, got {max_depth}")
        if int(nodes_per_panel) < 5 or int(nodes_per_panel) not in SUPPORTED_PANEL_RULES:
            raise ParameterError(
                f"nodes_per_panel must be one of {SUPPORTED_PANEL_RULES}, got {nodes_per_panel}"
            )
        if not (math.isfinite(initial_radius) and initial_radius > 0):
            raise ParameterError(
                f"initial_radius must be positive, got {initial_radius}"
            )

        self._abs_tol = float(abs_tol)
        self._rel_tol = float(rel_tol)
        self._max_depth = int(max_depth)
        self._nodes_per_panel = int(nodes_per_panel)
        self._initial_radius = float(initial_radius)

    @classmethod
    def default(cls) -> "QuadConfig":
        return cls(
            abs_tol=settings.ABS_TOL,
            rel_tol=settings.REL_TOL,
            max_depth=settings.MAX_DEPTH,
            nodes_per_panel=settings.NODES_PER_PANEL,
            initial_radius=settings.INITIAL_RADIUS,
        )

    @property
    def abs_tol(self) -> float:
        return self._abs_tol

    @property
    def rel_tol(self) -> float:
        return self._rel_tol

    @property
    def max_depth(self) -> int:
        return self._max_depth

    @property
    def nodes_per_panel(self) -> int:
        return self._nodes_per_panel

    @property
    def initial_radius(self) -> float:
        return self._initial_radius

    def tightened(
        self, abs_tol: float | None = None, rel_tol: float | None = None
    ) -> "QuadConfig":
        """Copy whose tolerances are never looser than the current ones."""
        return QuadConfig(
            abs_tol=min(self._abs_tol, abs_tol) if abs_tol else self._abs_tol,
            rel_tol=min(self._rel_tol, rel_tol) if rel_tol else self._rel_tol,
            max_depth=self._max_depth,
            nodes_per_panel=self._nodes_per_panel,
            initial_radius=self._initial_radius,
        )

    def replace(self, **changes: Any) -> "QuadConfig":
        values = self.to_dict()
        values.update(changes)
        return QuadConfig(**values)

    def to_dict(self) -> dict[str, Any]:
        return {
            "abs_tol": self._abs_tol,
            "rel_tol": self._rel_tol,
            "max_depth": self._max_depth,
            "nodes_per_panel": self._nodes_per_panel,
            "initial_radius": self._initial_radius,
        }

    def _get_equality_components(self) -> tuple:
        return tuple(self.to_dict().values())


class SeriesConfig(ValueObject):
    """
    dim_cutoff of None means the per-dimension default for the number of
    summation indices (settings CUTOFF_R1/_R2/_R3).
    """

    def __init__(
        self,
        dim_cutoff: int | None,
        tail_tol: float,
        expectation_cfg: QuadConfig,
    ) -> None:
        if dim_cutoff is not None and int(dim_cutoff) < 1:
            raise ParameterError(f"dim_cutoff must be at least 1, got {dim_cutoff}")
        if not (math.isfinite(tail_tol) and tail_tol >= 0):
            raise ParameterError(f"tail_tol must be nonnegative, got {tail_tol}")
        if not isinstance(expectation_cfg, QuadConfig):
            raise ParameterError("expectation_cfg should be a QuadConfig")

        self._dim_cutoff = None if dim_cutoff is None else int(dim_cutoff)
        self._tail_tol = float(tail_tol)
        self._expectation_cfg = expectation_cfg

    @classmethod
    def default(cls, expectation_cfg: QuadConfig | None = None) -> "SeriesConfig":
        return cls(
            dim_cutoff=None,
            tail_tol=settings.TAIL_TOL,
            expectation_cfg=expectation_cfg or QuadConfig.default(),
        )

    @property
    def dim_cutoff(self) -> int | None:
        return self._dim_cutoff

    @property
    def tail_tol(self) -> float:
        return self._tail_tol

    @property
    def expectation_cfg(self) -> QuadConfig:
        return self._expectation_cfg

    def with_expectation_cfg(self, expectation_cfg: QuadConfig) -> "SeriesConfig":
        return SeriesConfig(self._dim_cutoff, self._tail_tol, expectation_cfg)

    def cutoff_for(self, r: int) -> int:
        if self._dim_cutoff is not None:
            return self._dim_cutoff
        defaults = {1: settings.CUTOFF_R1, 2: settings.CUTOFF_R2, 3: settings.CUTOFF_R3}
        if r not in defaults:
            raise ParameterError(f"direct summation supports r <= 3, got r={r}")
        return defaults[r]

    def to_dict(self) -> dict[str, Any]:
        return {
            "dim_cutoff": self._dim_cutoff,
            "tail_tol": self._tail_tol,
            "expectation_cfg": self._expectation_cfg.to_dict(),
        }

    def _get_equality_components(self) -> tuple:
        return (self._dim_cutoff, self._tail_tol, self._expectation_cfg)
