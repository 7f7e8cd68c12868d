"""Zeta result dto mappers"""

from hyperzeta.application.dtos import EvaluationDTO, GridPointDTO, PoleDTO
from hyperzeta.domain.entities import EvalResult, PoleEntry, PoleReport

GRID_OK = "ok"


class EvaluationDTOMapper:
    """Evaluation result dto mapper"""

    @staticmethod
    def to_dto(result: EvalResult) -> EvaluationDTO:
        """Converts an evaluation result to dto"""

        return EvaluationDTO(
            value_re=result.value.real,
            value_im=result.value.imag,
            err_estimate=result.err_estimate,
            method=result.method.value,
            warnings=list(result.warnings),
        )


class PoleDTOMapper:
    """Pole entry dto mapper"""

    @staticmethod
    def to_dto(entry: PoleEntry) -> PoleDTO:
        return PoleDTO(
            location=entry.location,
            residue=entry.residue,
            kind=entry.kind.value,
        )

    @staticmethod
    def list_to_dto(report: PoleReport) -> list[PoleDTO]:
        """Converts every entry of a pole report, keeping its order"""

        return [PoleDTOMapper.to_dto(entry) for entry in report]


class GridPointDTOMapper:
    """Grid point dto mapper"""

    @staticmethod
    def to_dto(s: complex, result: EvalResult) -> GridPointDTO:
        return GridPointDTO(
            re=s.real,
            im=s.imag,
            flag=GRID_OK,
            value_re=result.value.real,
            value_im=result.value.imag,
            abs=abs(result.value),
            err_estimate=result.err_estimate,
        )

    @staticmethod
    def flagged(s: complex, flag: str, message: str = "") -> GridPointDTO:
        """A grid point without a value"""

        return GridPointDTO(re=s.real, im=s.imag, flag=flag, message=message)
