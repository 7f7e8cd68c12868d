from .parameter_exceptions import ParameterError
from .special_exceptions import (
    BranchCutError,
    IntegerArgumentError,
    PoleError,
    ZeroBaseError,
)
from .quadrature_exceptions import DivergenceError, MaxDepthError
from .distribution_exceptions import (
    DensityInversionError,
    NonIntegerOrderError,
    SingularPointError,
    SlowDecayError,
    UnsupportedFamilyError,
)
from .series_exceptions import ConvergenceRegionError, TailToleranceError
from .zeta_exceptions import AtPoleError, DisagreementError

__all__ = (
    "ParameterError",
    "BranchCutError",
    "IntegerArgumentError",
    "PoleError",
    "ZeroBaseError",
    "DivergenceError",
    "MaxDepthError",
    "DensityInversionError",
    "NonIntegerOrderError",
    "SingularPointError",
    "SlowDecayError",
    "UnsupportedFamilyError",
    "ConvergenceRegionError",
    "TailToleranceError",
    "AtPoleError",
    "DisagreementError",
)
