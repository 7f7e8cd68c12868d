"""
Output formats owned by the command line.

JSON goes through orjson with every float written at 17 significant digits,
enough to read back the same double. CSV cells use 12 significant digits.
"""

import dataclasses
from typing import Any, Iterable

import numpy as np
import orjson

from hyperzeta.application.dtos import (
    CheckResultDTO,
    EvaluationDTO,
    GridPointDTO,
    PoleDTO,
    SampleDTO,
)

__all__ = (
    "GRID_HEADER",
    "dumps",
    "render_evaluation",
    "render_poles",
    "render_grid",
    "render_sample",
    "render_selfcheck",
    "render_error",
)

GRID_HEADER = ("re", "im", "value_re", "value_im", "abs", "err_estimate", "flag")
JSON_OPTIONS = orjson.OPT_SERIALIZE_NUMPY | orjson.OPT_NON_STR_KEYS
JSON_DIGITS = 17


def _number(value: float) -> orjson.Fragment | None:
    if not np.isfinite(value):
        return None
    text = f"{float(value):.{JSON_DIGITS}g}"
    if text.lstrip("-").isdigit():
        text += ".0"
    return orjson.Fragment(text)


def _with_digits(data: Any) -> Any:
    if isinstance(data, (float, np.floating)):
        return _number(data)
    if isinstance(data, np.ndarray):
        return _with_digits(data.tolist())
    if isinstance(data, dict):
        return {key: _with_digits(value) for key, value in data.items()}
    if isinstance(data, (list, tuple)):
        return [_with_digits(value) for value in data]
    return data


def dumps(data: Any) -> str:
    """Serialize with fixed-precision floats; non-finite floats become null."""
    return orjson.dumps(_with_digits(data), option=JSON_OPTIONS, default=str).decode("utf-8")


def _cell(value: float | None) -> str:
    if value is None:
        return ""
    return f"{value:.12g}"


def _csv(header: Iterable[str], rows: Iterable[Iterable[str]]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(row) for row in rows)
    return "\n".join(lines) + "\n"


def render_evaluation(dto: EvaluationDTO, fmt: str = "json") -> str:
    if fmt == "csv":
        row = (_cell(dto.value_re), _cell(dto.value_im), _cell(dto.err_estimate), dto.method)
        return _csv(("value_re", "value_im", "err_estimate", "method"), [row])
    payload = {
        "value": {"re": dto.value_re, "im": dto.value_im},
        "err_estimate": dto.err_estimate,
        "method": dto.method,
        "warnings": dto.warnings,
    }
    return dumps(payload) + "\n"


def render_poles(poles: list[PoleDTO], fmt: str = "json") -> str:
    if fmt == "csv":
        rows = [(_cell(p.location), _cell(p.residue), p.kind) for p in poles]
        return _csv(("location", "residue", "kind"), rows)
    return dumps([dataclasses.asdict(p) for p in poles]) + "\n"


def render_grid(points: list[GridPointDTO], fmt: str = "csv") -> str:
    if fmt == "json":
        return dumps([dataclasses.asdict(p) for p in points]) + "\n"
    rows = [
        (
            _cell(p.re),
            _cell(p.im),
            _cell(p.value_re),
            _cell(p.value_im),
            _cell(p.abs),
            _cell(p.err_estimate),
            p.flag,
        )
        for p in points
    ]
    return _csv(GRID_HEADER, rows)


def render_sample(dto: SampleDTO) -> str:
    """One draw per line, no header."""
    return "".join(f"{_cell(x)}\n" for x in dto.draws)


def render_selfcheck(checks: list[CheckResultDTO]) -> str:
    width = max([len("check")] + [len(c.name) for c in checks])
    lines = [f"{'check':<{width}}  result  seconds  detail"]
    for check in checks:
        status = "PASS" if check.passed else "FAIL"
        lines.append(f"{check.name:<{width}}  {status:<6}  {check.seconds:7.2f}  {check.detail}")
    passed = sum(c.passed for c in checks)
    lines.append(f"{passed}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n"


def render_error(message: str, exit_code: int, details: dict[str, Any] | None = None) -> str:
    """Single machine-readable line for standard error."""
    payload = {"error": message, "exit_code": exit_code, "details": details or {}}
    return dumps(payload) + "\n"
