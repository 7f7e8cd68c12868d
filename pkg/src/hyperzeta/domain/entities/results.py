"""
Records returned by the evaluation engines.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from hyperzeta.domain.exceptions import ParameterError

__all__ = (
    "EvalMethod",
    "EvalMode",
    "PoleKind",
    "QuadResult",
    "EvalResult",
    "PoleEntry",
    "PoleReport",
    "OracleValue",
)


class EvalMethod(Enum):
    SERIES = "series"
    INTEGRAL = "integral"
    MELLIN = "mellin"


class EvalMode(Enum):
    """Path selection for dispatch; VERIFY runs every legal path and compares."""

    AUTO = "auto"
    SERIES = "series"
    INTEGRAL = "integral"
    MELLIN = "mellin"
    VERIFY = "verify"

    @classmethod
    def from_string(cls, value: str) -> "EvalMode":
        try:
            return cls(value.strip().lower())
        except ValueError as e:
            raise ParameterError(f"unknown evaluation mode: {value!r}") from e


class PoleKind(Enum):
    INTEGER_CASE = "integer-case"
    NONINTEGER_CASE_I = "noninteger-case-i"
    NONINTEGER_CASE_II = "noninteger-case-ii"


def _check_finite(value: complex, name: str) -> None:
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ValueError(f"{name} must be finite, got {value}")


@dataclass(frozen=True)
class QuadResult:
    """err_estimate already includes truncation_bound."""

    value: complex
    err_estimate: float
    panels_used: int
    truncation_bound: float = 0.0

    def __post_init__(self) -> None:
        _check_finite(complex(self.value), "value")
        if not self.err_estimate >= self.truncation_bound >= 0.0:
            raise ValueError("err_estimate must include a nonnegative truncation_bound")


@dataclass(frozen=True)
class EvalResult:
    value: complex
    err_estimate: float
    method: EvalMethod
    warnings: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        _check_finite(complex(self.value), "value")
        if not self.err_estimate >= 0.0:
            raise ValueError("err_estimate must be nonnegative")

    def with_warnings(self, *messages: str) -> "EvalResult":
        return EvalResult(
            value=self.value,
            err_estimate=self.err_estimate,
            method=self.method,
            warnings=self.warnings + tuple(messages),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "value": {"re": self.value.real, "im": self.value.imag},
            "err_estimate": self.err_estimate,
            "method": self.method.value,
            "warnings": list(self.warnings),
        }


@dataclass(frozen=True)
class PoleEntry:
    location: float
    residue: float
    kind: PoleKind


@dataclass(frozen=True)
class PoleReport:
    entries: tuple[PoleEntry, ...]

    def __post_init__(self) -> None:
        locations = [entry.location for entry in self.entries]
        if any(x <= y for x, y in zip(locations, locations[1:])):
            raise ValueError("pole locations must be strictly decreasing")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def nearest(self, s: complex) -> PoleEntry | None:
        if not self.entries:
            return None
        return min(self.entries, key=lambda entry: abs(complex(s) - entry.location))


@dataclass(frozen=True)
class OracleValue:
    value: complex
    claimed_accuracy: float
    source: str
