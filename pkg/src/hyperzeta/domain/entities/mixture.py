"""
Weighted sums of independent halved hyperbolic variables.
"""

import math
from typing import Any, Iterable

from hyperzeta.domain.entities.family import Family
from hyperzeta.domain.exceptions import ParameterError
from shared.domain.entities import ValueObject

__all__ = ("MixtureSpec", "is_integer_order")

INTEGER_TOLERANCE = 1e-9


def is_integer_order(value: float) -> bool:
    return abs(value - round(value)) < INTEGER_TOLERANCE


class MixtureSpec(ValueObject):
    """
    Law of Σ_j a_j X_j where X_j is half of a hyperbolic variable of order α_j.

    components holds the ordered pairs (a_j, α_j).
    """

    def __init__(
        self, family: Family, components: Iterable[tuple[float, float]]
    ) -> None:
        if not isinstance(family, Family):
            raise ParameterError("family should be an instance of Family")

        pairs = tuple((float(a), float(alpha)) for a, alpha in components)
        if not pairs:
            raise ParameterError("a mixture needs at least one component")

        for a, alpha in pairs:
            if not (math.isfinite(a) and a > 0):
                raise ParameterError(f"weights must be positive, got a={a}")
            if not (math.isfinite(alpha) and alpha > 0):
                raise ParameterError(f"orders must be positive, got alpha={alpha}")
            if family is Family.TANH and not is_integer_order(alpha):
                raise ParameterError(
                    f"tanh mixtures need integer orders, got alpha={alpha}"
                )

        self._family = family
        self._components = pairs

    @classmethod
    def single(cls, family: Family, a: float, alpha: float) -> "MixtureSpec":
        return cls(family, [(a, alpha)])

    @property
    def family(self) -> Family:
        return self._family

    @property
    def components(self) -> tuple[tuple[float, float], ...]:
        return self._components

    @property
    def weights(self) -> tuple[float, ...]:
        return tuple(a for a, _ in self._components)

    @property
    def orders(self) -> tuple[float, ...]:
        return tuple(alpha for _, alpha in self._components)

    @property
    def r(self) -> int:
        return len(self._components)

    @property
    def beta(self) -> float:
        return math.fsum(self.orders)

    @property
    def has_integer_orders(self) -> bool:
        return all(is_integer_order(alpha) for alpha in self.orders)

    @property
    def max_weight(self) -> float:
        return max(self.weights)

    @property
    def min_weight(self) -> float:
        return min(self.weights)

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self._family.value,
            "a": list(self.weights),
            "alpha": list(self.orders),
        }

    def _get_equality_components(self) -> tuple:
        return (self._family, self._components)
