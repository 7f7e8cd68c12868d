"""
Golden invocations of the command line, contributed to the self-check suite.

Each case runs in-process twice; both runs must return the expected exit code
and byte-identical output, and the payload must match the expected values.
"""

import io
import logging
from dataclasses import dataclass
from typing import Any, Callable

import orjson

from hyperzeta.application.services import ExtraCheckProvider, NamedCheck
from hyperzeta.domain.entities import QuadConfig
from hyperzeta.infrastructure.cli.exit_codes import ExitCode

__all__ = ("GoldenCase", "GOLDEN_CASES", "CliGoldenChecks", "run_cli")

logger = logging.getLogger(__name__)

HURWITZ = ["--family", "sinh", "--alpha", "1", "--a", "1", "--b", "1"]


@dataclass(frozen=True)
class GoldenCase:
    name: str
    argv: list[str]
    exit_code: ExitCode
    # returns an empty string when the output is as expected
    verify: Callable[[str, str], str]
    fast: bool = True


def run_cli(argv: list[str]) -> tuple[int, str, str]:
    from hyperzeta.infrastructure.cli.main import main

    stdout, stderr = io.StringIO(), io.StringIO()
    code = main(argv, stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def _close(actual: float, expected: float, tol: float) -> bool:
    return abs(actual - expected) <= tol


def _eval_value(expected: float, tol: float) -> Callable[[str, str], str]:
    def verify(out: str, err: str) -> str:
        value = orjson.loads(out)["value"]
        if _close(value["re"], expected, tol) and abs(value["im"]) <= tol:
            return ""
        return f"value {value} is not {expected}"

    return verify


def _error_line(kind: str, **expected: Any) -> Callable[[str, str], str]:
    def verify(out: str, err: str) -> str:
        lines = err.splitlines()
        if len(lines) != 1:
            return f"expected one error line, got {len(lines)}"
        details = orjson.loads(lines[0])["details"]
        if details.get("kind") != kind:
            return f"error kind {details.get('kind')} is not {kind}"
        for key, value in expected.items():
            if key not in details or not _close(float(details[key]), value, 1e-6):
                return f"details.{key} = {details.get(key)} is not {value}"
        return ""

    return verify


def _pole_locations(expected: list[float], residues: list[float] | None = None):
    def verify(out: str, err: str) -> str:
        poles = orjson.loads(out)
        locations = [pole["location"] for pole in poles]
        if len(locations) != len(expected) or not all(
            _close(x, y, 1e-12) for x, y in zip(locations, expected)
        ):
            return f"poles at {locations}, expected {expected}"
        if residues is not None and not all(
            _close(pole["residue"], r, 1e-9) for pole, r in zip(poles, residues)
        ):
            return f"residues {[pole['residue'] for pole in poles]}, expected {residues}"
        return ""

    return verify


def _grid_rows(out: str) -> list[dict[str, str]]:
    header, *rows = out.splitlines()
    keys = header.split(",")
    return [dict(zip(keys, row.split(","))) for row in rows]


def _grid_all_ok(out: str, err: str) -> str:
    flags = {row["flag"] for row in _grid_rows(out)}
    return "" if flags == {"ok"} else f"flags {sorted(flags)}"


def _grid_pole_row(out: str, err: str) -> str:
    rows = _grid_rows(out)
    flagged = [(row["re"], row["im"]) for row in rows if row["flag"] != "ok"]
    if flagged != [("1", "0")]:
        return f"flagged rows {flagged}, expected only s = 1"
    by_point = {(float(row["re"]), float(row["im"])): row for row in rows}
    for (re, im), row in by_point.items():
        mirror = by_point.get((re, -im))
        if row["flag"] == "ok" and mirror and not _close(
            float(row["abs"]), float(mirror["abs"]), 1e-9 * max(1.0, float(row["abs"]))
        ):
            return f"abs not symmetric at {re}{im:+}i"
    return ""


def _sample_lines(count: int) -> Callable[[str, str], str]:
    def verify(out: str, err: str) -> str:
        lines = out.splitlines()
        if len(lines) != count:
            return f"{len(lines)} draws, expected {count}"
        return ""

    return verify


GOLDEN_CASES = (
    GoldenCase(
        "eval-zeta2", ["eval", *HURWITZ, "--s", "2"], ExitCode.OK, _eval_value(1.6449341, 1e-6)
    ),
    GoldenCase(
        "eval-eta0",
        ["eval", "--family", "cosh", "--alpha", "1", "--a", "1", "--b", "1", "--s", "0"],
        ExitCode.OK,
        _eval_value(0.5, 1e-12),
    ),
    GoldenCase(
        "eval-c-zero",
        ["eval", "--family", "sinh", "--alpha", "1", "--a", "1", "--b", "0.5", "--s", "2"],
        ExitCode.VALIDATION,
        _error_line("ParameterError"),
    ),
    GoldenCase(
        "eval-at-pole",
        ["eval", *HURWITZ, "--s", "1"],
        ExitCode.SINGULARITY,
        _error_line("AtPoleError", pole=1.0, residue=1.0),
    ),
    GoldenCase(
        "eval-bad-flag",
        ["eval", *HURWITZ, "--s", "two"],
        ExitCode.USAGE,
        lambda out, err: "" if len(err.splitlines()) == 1 else "expected one error line",
    ),
    GoldenCase("poles-hurwitz", ["poles", *HURWITZ], ExitCode.OK, _pole_locations([1.0], [1.0])),
    GoldenCase(
        "poles-barnes2",
        ["poles", "--alpha", "1,1", "--a", "1,1", "--b", "3"],
        ExitCode.OK,
        _pole_locations([2.0, 1.0]),
    ),
    GoldenCase(
        "poles-half-order",
        ["poles", "--alpha", "0.5", "--a", "1", "--b", "1", "--n-max", "3"],
        ExitCode.OK,
        _pole_locations([0.5, -0.5, -1.5, -2.5]),
    ),
    GoldenCase(
        "sample-tanh",
        ["sample", "--family", "tanh", "--alpha", "1", "--a", "1", "--count", "10", "--seed", "7"],
        ExitCode.VALIDATION,
        _error_line("UnsupportedFamilyError"),
    ),
    GoldenCase(
        "sample-sinh",
        ["sample", "--family", "sinh", "--alpha", "1", "--a", "1", "--count", "10", "--seed", "7"],
        ExitCode.OK,
        _sample_lines(10),
    ),
    GoldenCase(
        "grid-cosh-entire",
        [
            "grid", "--family", "cosh", "--alpha", "1", "--a", "1", "--b", "1",
            "--re-min=-3", "--re-max", "3", "--re-step", "3",
            "--im-min=-3", "--im-max", "3", "--im-step", "3",
        ],
        ExitCode.OK,
        _grid_all_ok,
        fast=False,
    ),
    GoldenCase(
        "grid-hurwitz-pole",
        [
            "grid", *HURWITZ,
            "--re-min", "0.5", "--re-max", "1.5", "--re-step", "0.5",
            "--im-min=-0.5", "--im-max", "0.5", "--im-step", "0.5",
        ],
        ExitCode.OK,
        _grid_pole_row,
        fast=False,
    ),
)


class CliGoldenChecks(ExtraCheckProvider):
    def __init__(self, cases: tuple[GoldenCase, ...] = GOLDEN_CASES) -> None:
        self.cases = cases

    def checks(self) -> list[NamedCheck]:
        return [NamedCheck("cli-golden", self.check_golden)]

    def check_golden(self, cfg: QuadConfig, fast: bool) -> tuple[bool, str]:
        failures = []
        ran = 0
        for case in self.cases:
            if fast and not case.fast:
                continue
            ran += 1
            first = run_cli(case.argv)
            second = run_cli(case.argv)
            if first != second:
                failures.append(f"{case.name}: output differs between runs")
                continue
            code, out, err = first
            if code != case.exit_code:
                failures.append(f"{case.name}: exit {code}, expected {int(case.exit_code)}")
                continue
            problem = case.verify(out, err)
            if problem:
                failures.append(f"{case.name}: {problem}")
        if failures:
            logger.warning(f"golden invocations failed: {failures}")
            return False, "; ".join(failures)
        return True, f"{ran} invocations reproduced"
