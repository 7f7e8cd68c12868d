"""Test self-check query handlers"""

from unittest.mock import MagicMock

import pytest

from hyperzeta.application.dtos import CheckResultDTO, SelfCheckReportDTO
from hyperzeta.application.queries import SelfCheckQuery
from hyperzeta.application.query_handlers import SelfCheckQueryHandler
from hyperzeta.application.services import SelfCheckService
from hyperzeta.domain.entities import QuadConfig


@pytest.fixture
def mock_selfcheck_service() -> MagicMock:
    service = MagicMock(spec=SelfCheckService)
    service.run.return_value = SelfCheckReportDTO(
        checks=[CheckResultDTO("classical-values", True, "ok", 0.1)]
    )
    return service


@pytest.mark.application
@pytest.mark.unit
class TestSelfCheckQueryHandler:
    """Test running the self-check suite"""

    def test_forwards_flags(
        self, mock_selfcheck_service: MagicMock, quad_config: QuadConfig
    ) -> None:
        # Arrange
        handler = SelfCheckQueryHandler(service=mock_selfcheck_service, quad_config=quad_config)
        query = SelfCheckQuery(fast=True, only=["classical-values"])

        # Act
        result = handler.handle(query)

        # Assert
        assert result.passed
        mock_selfcheck_service.run.assert_called_once_with(
            quad_config, fast=True, only=["classical-values"]
        )

    @pytest.mark.parametrize(
        "abs_tol, expected_abs_tol", [(1e-12, 1e-12), (1e-3, None), (None, None)]
    )
    def test_tolerances_only_tighten(
        self,
        mock_selfcheck_service: MagicMock,
        quad_config: QuadConfig,
        abs_tol: float | None,
        expected_abs_tol: float | None,
    ) -> None:
        # Arrange
        handler = SelfCheckQueryHandler(service=mock_selfcheck_service, quad_config=quad_config)

        # Act
        handler.handle(SelfCheckQuery(abs_tol=abs_tol))

        # Assert
        used = mock_selfcheck_service.run.call_args.args[0]
        assert used.abs_tol == (expected_abs_tol or quad_config.abs_tol)
        assert used.rel_tol == quad_config.rel_tol
