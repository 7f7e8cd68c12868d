"""
Request schemas of the command-line subcommands.

Schemas only check shape and types; domain rules (c ≠ 0, positive weights,
integer tanh orders) are left to the domain so they surface as parameter
errors rather than usage errors.
"""

from pathlib import Path
from typing import Literal

from pydantic import (
    BaseModel,
    ConfigDict,
    NonNegativeInt,
    PositiveFloat,
    PositiveInt,
    field_validator,
    model_validator,
)

from hyperzeta.infrastructure.cli.parsing import parse_complex, parse_float_list

__all__ = (
    "EvalRequest",
    "PolesRequest",
    "GridRequest",
    "SampleRequest",
    "SelfCheckRequest",
)

FamilyName = Literal["sinh", "cosh", "tanh"]
ModeName = Literal["auto", "series", "integral", "mellin", "verify"]
FormatName = Literal["json", "csv"]


class CliRequest(BaseModel):
    """Common options: output path and tighten-only tolerance overrides."""

    model_config = ConfigDict(extra="ignore", frozen=True, allow_inf_nan=False)

    abs_tol: PositiveFloat | None = None
    rel_tol: PositiveFloat | None = None
    output: Path | None = None


class WeightsRequest(CliRequest):
    family: FamilyName
    alpha: list[float]
    a: list[float]

    @field_validator("alpha", "a", mode="before")
    @classmethod
    def split_list(cls, value):
        return parse_float_list(value)

    @model_validator(mode="after")
    def check_lengths(self):
        if len(self.alpha) != len(self.a):
            raise ValueError("--alpha and --a need the same number of entries")
        return self


class ParamsRequest(WeightsRequest):
    b: float


class EvalRequest(ParamsRequest):
    s: complex
    mode: ModeName = "auto"
    format: FormatName = "json"

    @field_validator("s", mode="before")
    @classmethod
    def parse_s(cls, value):
        return parse_complex(value)


class PolesRequest(ParamsRequest):
    family: FamilyName = "sinh"
    n_max: NonNegativeInt | None = None
    format: FormatName = "json"


class GridRequest(ParamsRequest):
    re_min: float
    re_max: float
    re_step: float
    im_min: float
    im_max: float
    im_step: float
    mode: ModeName = "integral"
    format: FormatName = "csv"
    workers: PositiveInt | None = None


class SampleRequest(WeightsRequest):
    count: PositiveInt
    seed: int


class SelfCheckRequest(CliRequest):
    fast: bool = False
    tol: PositiveFloat | None = None
    only: list[str] = []

    @field_validator("only", mode="before")
    @classmethod
    def split_names(cls, value):
        if value is None:
            return []
        if isinstance(value, str):
            return [name.strip() for name in value.split(",") if name.strip()]
        return value
