"""Hyperzeta application DTO mappers"""

from .zeta_mappers import EvaluationDTOMapper, GridPointDTOMapper, PoleDTOMapper

__all__ = (
    "EvaluationDTOMapper",
    "PoleDTOMapper",
    "GridPointDTOMapper",
)
