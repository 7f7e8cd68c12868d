from .family import Family
from .mixture import MixtureSpec, is_integer_order
from .params import ZetaParams
from .configs import QuadConfig, SeriesConfig
from .results import (
    EvalMethod,
    EvalMode,
    EvalResult,
    OracleValue,
    PoleEntry,
    PoleKind,
    PoleReport,
    QuadResult,
)

__all__ = (
    "Family",
    "MixtureSpec",
    "is_integer_order",
    "ZetaParams",
    "QuadConfig",
    "SeriesConfig",
    "EvalMethod",
    "EvalMode",
    "EvalResult",
    "OracleValue",
    "PoleEntry",
    "PoleKind",
    "PoleReport",
    "QuadResult",
)
