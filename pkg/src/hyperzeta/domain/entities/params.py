"""
Parameter pack of the sinh-, cosh- and tanh-moment zeta functions.
"""

import math
from typing import Any, Sequence

from config import settings
from hyperzeta.domain.entities.family import Family
from hyperzeta.domain.entities.mixture import MixtureSpec, is_integer_order
from hyperzeta.domain.exceptions import ParameterError
from shared.domain.entities import ValueObject

__all__ = ("ZetaParams",)


class ZetaParams(ValueObject):
    """
    Family, orders α, weights a and shift b of

        S(s; b) = Σ_n ∏ C(n_j+α_j−1, n_j) (a·n + b)^{−s}

    and its cosh/tanh analogues. Derived quantities: β = Σα_j,
    λ = ½Σa_jα_j, c = b − λ and c_r = ∏a_j^{−α_j}.
    """

    def __init__(
        self,
        family: Family,
        alpha: Sequence[float],
        a: Sequence[float],
        b: float,
    ) -> None:
        if not isinstance(family, Family):
            raise ParameterError("family should be an instance of Family")

        alpha = tuple(float(x) for x in alpha)
        a = tuple(float(x) for x in a)
        b = float(b)

        if len(alpha) == 0 or len(alpha) != len(a):
            raise ParameterError(
                f"alpha and a must be non-empty and of equal length, got {len(alpha)} and {len(a)}"
            )
        if any(not (math.isfinite(x) and x > 0) for x in alpha):
            raise ParameterError(f"every alpha_j must be positive, got {list(alpha)}")
        if any(not (math.isfinite(x) and x > 0) for x in a):
            raise ParameterError(f"every a_j must be positive, got {list(a)}")
        if not (math.isfinite(b) and b > 0):
            raise ParameterError(f"b must be positive, got {b}")
        if family is Family.TANH and not all(is_integer_order(x) for x in alpha):
            raise ParameterError(
                f"the tanh family needs integer alpha_j, got {list(alpha)}"
            )

        self._family = family
        self._alpha = alpha
        self._a = a
        self._b = b

        # the tanh representation only involves b > 0
        if family is not Family.TANH and abs(self.c) < settings.MIN_ABS_C:
            raise ParameterError(
                f"c = b - sum(a_j alpha_j)/2 must be nonzero, got c={self.c:.3g}"
            )

    @property
    def family(self) -> Family:
        return self._family

    @property
    def alpha(self) -> tuple[float, ...]:
        return self._alpha

    @property
    def a(self) -> tuple[float, ...]:
        return self._a

    @property
    def b(self) -> float:
        return self._b

    @property
    def r(self) -> int:
        return len(self._alpha)

    @property
    def beta(self) -> float:
        return math.fsum(self._alpha)

    @property
    def has_integer_beta(self) -> bool:
        return is_integer_order(self.beta)

    @property
    def lam(self) -> float:
        return 0.5 * math.fsum(x * y for x, y in zip(self._a, self._alpha))

    @property
    def c(self) -> float:
        return self._b - self.lam

    @property
    def c_r(self) -> float:
        return math.exp(-math.fsum(al * math.log(x) for x, al in zip(self._a, self._alpha)))

    def mixture(self) -> MixtureSpec:
        """Law of Y_r, Z_r or W_r according to the family."""
        return MixtureSpec(self._family, zip(self._a, self._alpha))

    def with_family(self, family: Family) -> "ZetaParams":
        return ZetaParams(family, self._alpha, self._a, self._b)

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self._family.value,
            "alpha": list(self._alpha),
            "a": list(self._a),
            "b": self._b,
        }

    def _get_equality_components(self) -> tuple:
        return (self._family, self._alpha, self._a, self._b)
