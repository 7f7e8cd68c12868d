"""
Hyperbolic distribution families.
"""

from enum import Enum

from hyperzeta.domain.exceptions import ParameterError

__all__ = ("Family",)


class Family(Enum):
    """
    The three hyperbolic laws: characteristic functions (θ/sinh θ)^t,
    sech^t θ and (tanh θ/θ)^t.
    """

    SINH = "sinh"
    COSH = "cosh"
    TANH = "tanh"

    @classmethod
    def from_string(cls, value: str) -> "Family":
        try:
            return cls(value.strip().lower())
        except (ValueError, AttributeError):
            raise ParameterError(f"unknown family {value!r}")

    def __str__(self) -> str:
        return self.value
