"""Test command-line request schemas"""

from pathlib import Path

import pytest
from pydantic import ValidationError

from hyperzeta.infrastructure.cli.schemas import (
    EvalRequest,
    GridRequest,
    PolesRequest,
    SampleRequest,
    SelfCheckRequest,
)


@pytest.fixture
def eval_options() -> dict[str, str]:
    return {"family": "sinh", "alpha": "1,1", "a": "1,2", "b": "3", "s": "1+2i"}


@pytest.mark.infrastructure
@pytest.mark.unit
class TestEvalRequest:
    """Test eval requests"""

    def test_parses_flag_strings(self, eval_options: dict[str, str]) -> None:
        # Act
        request = EvalRequest.model_validate(eval_options)

        # Assert
        assert request.alpha == [1.0, 1.0]
        assert request.a == [1.0, 2.0]
        assert request.b == 3.0
        assert request.s == 1 + 2j
        assert (request.mode, request.format) == ("auto", "json")
        assert request.output is None

    def test_ignores_unknown_keys(self, eval_options: dict[str, str]) -> None:
        # Act
        request = EvalRequest.model_validate({**eval_options, "command": object()})

        # Assert
        assert not hasattr(request, "command")

    def test_length_mismatch(self, eval_options: dict[str, str]) -> None:
        with pytest.raises(ValidationError, match="same number of entries"):
            EvalRequest.model_validate({**eval_options, "a": "1"})

    @pytest.mark.parametrize(
        "key, value",
        [
            ("family", "exp"),
            ("mode", "fastest"),
            ("s", "two"),
            ("abs_tol", "-1e-3"),
            ("rel_tol", "nan"),
            ("b", "inf"),
        ],
    )
    def test_rejected_values(self, eval_options: dict[str, str], key: str, value: str) -> None:
        with pytest.raises(ValidationError):
            EvalRequest.model_validate({**eval_options, key: value})

    def test_output_path(self, eval_options: dict[str, str], tmp_path: Path) -> None:
        # Act
        request = EvalRequest.model_validate({**eval_options, "output": str(tmp_path / "x.json")})

        # Assert
        assert request.output == tmp_path / "x.json"


@pytest.mark.infrastructure
@pytest.mark.unit
class TestOtherRequests:
    """Test poles, grid, sample and selfcheck requests"""

    def test_poles_defaults_to_sinh(self) -> None:
        # Act
        request = PolesRequest.model_validate({"alpha": "0.5", "a": "1", "b": "1"})

        # Assert
        assert request.family == "sinh"
        assert request.n_max is None

    def test_negative_n_max(self) -> None:
        with pytest.raises(ValidationError):
            PolesRequest.model_validate({"alpha": "1", "a": "1", "b": "1", "n_max": "-1"})

    def test_grid_defaults(self) -> None:
        # Act
        request = GridRequest.model_validate(
            {
                "family": "cosh",
                "alpha": "1",
                "a": "1",
                "b": "1",
                "re_min": "-3",
                "re_max": "3",
                "re_step": "1",
                "im_min": "0",
                "im_max": "1",
                "im_step": "1",
            }
        )

        # Assert
        assert (request.mode, request.format, request.workers) == ("integral", "csv", None)

    def test_sample_count_must_be_positive(self) -> None:
        with pytest.raises(ValidationError):
            SampleRequest.model_validate(
                {"family": "sinh", "alpha": "1", "a": "1", "count": "0", "seed": "1"}
            )

    @pytest.mark.parametrize(
        "only, expected",
        [("trivial-zeros, density-suite", ["trivial-zeros", "density-suite"]), (None, [])],
    )
    def test_selfcheck_only(self, only: str | None, expected: list[str]) -> None:
        assert SelfCheckRequest.model_validate({"only": only}).only == expected
