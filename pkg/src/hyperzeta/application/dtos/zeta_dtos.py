"""
Data Transfer Objects for zeta evaluations
"""

from dataclasses import dataclass, field

__all__ = (
    "EvaluationDTO",
    "PoleDTO",
    "GridPointDTO",
    "SampleDTO",
)


@dataclass
class EvaluationDTO:
    value_re: float
    value_im: float
    err_estimate: float
    method: str
    warnings: list[str] = field(default_factory=list)


@dataclass
class PoleDTO:
    location: float
    residue: float
    kind: str


@dataclass
class GridPointDTO:
    """Empty value fields (None) unless flag is "ok"."""

    re: float
    im: float
    flag: str
    value_re: float | None = None
    value_im: float | None = None
    abs: float | None = None
    err_estimate: float | None = None
    message: str = ""


@dataclass
class SampleDTO:
    family: str
    seed: int
    draws: list[float]
