"""Test zeta result mappers"""

import pytest

from hyperzeta.application.dtos import EvaluationDTO, GridPointDTO, PoleDTO
from hyperzeta.application.mappers import (
    EvaluationDTOMapper,
    GridPointDTOMapper,
    PoleDTOMapper,
)
from hyperzeta.domain.entities import EvalMethod, EvalResult, PoleEntry, PoleKind, PoleReport


@pytest.fixture
def eval_result() -> EvalResult:
    return EvalResult(
        value=3.0 - 4.0j, err_estimate=1e-11, method=EvalMethod.MELLIN, warnings=("note",)
    )


@pytest.mark.application
@pytest.mark.unit
class TestEvaluationDTOMapper:
    """Test EvaluationDTOMapper"""

    def test_to_dto(self, eval_result: EvalResult) -> None:
        # Act
        result = EvaluationDTOMapper.to_dto(eval_result)

        # Assert
        assert result == EvaluationDTO(
            value_re=3.0, value_im=-4.0, err_estimate=1e-11, method="mellin", warnings=["note"]
        )


@pytest.mark.application
@pytest.mark.unit
class TestPoleDTOMapper:
    """Test PoleDTOMapper"""

    def test_list_keeps_order(self) -> None:
        # Arrange
        report = PoleReport(
            entries=(
                PoleEntry(2.0, 1.0, PoleKind.INTEGER_CASE),
                PoleEntry(1.0, -2.0, PoleKind.INTEGER_CASE),
            )
        )

        # Act
        result = PoleDTOMapper.list_to_dto(report)

        # Assert
        assert result == [
            PoleDTO(location=2.0, residue=1.0, kind="integer-case"),
            PoleDTO(location=1.0, residue=-2.0, kind="integer-case"),
        ]


@pytest.mark.application
@pytest.mark.unit
class TestGridPointDTOMapper:
    """Test GridPointDTOMapper"""

    def test_to_dto(self, eval_result: EvalResult) -> None:
        # Act
        result = GridPointDTOMapper.to_dto(0.5 + 2.0j, eval_result)

        # Assert
        assert result.flag == "ok"
        assert (result.re, result.im) == (0.5, 2.0)
        assert result.abs == 5.0
        assert result.err_estimate == 1e-11

    def test_flagged(self) -> None:
        # Act
        result = GridPointDTOMapper.flagged(1.0 + 0j, "near-pole", "s is a pole")

        # Assert
        assert result == GridPointDTO(re=1.0, im=0.0, flag="near-pole", message="s is a pole")
        assert result.value_re is None
