"""
Zeta evaluation queries for CQRS implementation.
"""

from dataclasses import dataclass, field

from shared.application.cqrs import Query

__all__ = (
    "EvaluateZetaQuery",
    "PoleReportQuery",
    "GridSweepQuery",
    "SelfCheckQuery",
)


@dataclass
class EvaluateZetaQuery(Query):
    """Query to evaluate one zeta function at one point."""

    family: str
    alpha: list[float]
    a: list[float]
    b: float
    s: complex
    mode: str = "auto"

    # tolerance overrides, tighten only
    abs_tol: float | None = None
    rel_tol: float | None = None


@dataclass
class PoleReportQuery(Query):
    """Query to list the poles and residues of the sinh-moment function."""

    alpha: list[float]
    a: list[float]
    b: float
    n_max: int | None = None
    family: str = "sinh"
    abs_tol: float | None = None
    rel_tol: float | None = None


@dataclass
class GridSweepQuery(Query):
    family: str
    alpha: list[float]
    a: list[float]
    b: float

    # grid bounds, both inclusive
    re_min: float
    re_max: float
    re_step: float
    im_min: float
    im_max: float
    im_step: float

    mode: str = "integral"
    workers: int | None = None
    abs_tol: float | None = None
    rel_tol: float | None = None


@dataclass
class SelfCheckQuery(Query):
    """Query to run the self-check suite."""

    fast: bool = False
    abs_tol: float | None = None
    rel_tol: float | None = None
    only: list[str] = field(default_factory=list)
