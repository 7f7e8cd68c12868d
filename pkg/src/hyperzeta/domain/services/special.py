"""
Complex gamma-type special functions shared by every representation.

Log-gamma, reciprocal gamma and Bernoulli-free gamma values come from
scipy.special; the rest is built on top with explicit pole and branch
checks so that callers fail deterministically near singular points.
"""

import math

import numpy as np
from scipy import special as sp

from config import settings
from hyperzeta.domain.exceptions import (
    BranchCutError,
    IntegerArgumentError,
    ParameterError,
    PoleError,
    ZeroBaseError,
)

__all__ = (
    "log_gamma",
    "gamma",
    "rgamma",
    "complex_pow",
    "gamma_ratio",
    "gen_binomial",
    "binomial_weights",
    "beta_complex",
    "gamma_neg_real",
    "d_factor",
    "nonpositive_integer_near",
    "is_integer",
)

INTEGER_TOLERANCE = 1e-9


def is_integer(x: float) -> bool:
    return abs(x - round(x)) < INTEGER_TOLERANCE


def nonpositive_integer_near(z: complex, radius: float | None = None) -> int | None:
    """The non-positive integer within radius of z, if any."""
    radius = settings.POLE_RADIUS if radius is None else radius
    z = complex(z)
    k = round(z.real)
    if k <= 0 and abs(z - k) < radius:
        return int(k)
    return None


def log_gamma(z: complex) -> complex:
    """Principal log Γ(z); exp(log_gamma(z)) = Γ(z)."""
    z = complex(z)
    if nonpositive_integer_near(z) is not None:
        raise PoleError(f"log_gamma has a pole at {z}", location=z)
    return complex(sp.loggamma(z))


def gamma(z: complex) -> complex:
    z = complex(z)
    if nonpositive_integer_near(z) is not None:
        raise PoleError(f"gamma has a pole at {z}", location=z)
    if z.imag == 0.0:
        return complex(sp.gamma(z.real))
    return complex(sp.gamma(z))


def rgamma(z: complex) -> complex:
    """1/Γ(z), entire; exactly zero at the non-positive integers."""
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0 and z.real == round(z.real):
        return 0j
    return complex(sp.rgamma(z))


def complex_pow(base, exponent):
    """
    Principal power exp(exponent · Log(base)) with arg(base) in (−π, π].

    Accepts scalars or numpy arrays for base; array input returns an array.
    """
    base_arr = np.asarray(base, dtype=complex)
    if np.any(base_arr == 0):
        raise ZeroBaseError("complex_pow needs a nonzero base")
    if np.any((base_arr.imag == 0) & (base_arr.real < 0)):
        raise BranchCutError("complex_pow base lies on the negative real axis")

    result = np.exp(complex(exponent) * np.log(base_arr))
    if result.ndim == 0:
        return complex(result)
    return result


def gamma_ratio(s: complex, beta: float) -> complex:
    """
    Γ(s−β)/Γ(s) continued to all s.

    Integer β uses ∏_{k=1}^{β}(s−k)^{−1}. The ratio vanishes at the poles of
    Γ(s) and has poles where s−β is a non-positive integer.
    """
    if not beta > 0:
        raise ParameterError(f"gamma_ratio needs beta > 0, got {beta}")
    s = complex(s)

    if is_integer(beta):
        denominator = 1 + 0j
        for k in range(1, int(round(beta)) + 1):
            if abs(s - k) < settings.POLE_RADIUS:
                raise PoleError(f"gamma_ratio has a pole at s={k}", location=complex(k))
            denominator *= s - k
        return 1 / denominator

    if nonpositive_integer_near(s) is not None:
        return 0j
    if nonpositive_integer_near(s - beta) is not None:
        raise PoleError(
            f"gamma_ratio has a pole at s={s} (s - beta is a non-positive integer)",
            location=s,
        )
    return complex(np.exp(log_gamma(s - beta) - log_gamma(s)))


def gen_binomial(gamma_: float, n: int) -> float:
    """C(γ, n) = γ(γ−1)···(γ−n+1)/n! with C(γ, 0) = 1."""
    if n < 0:
        raise ParameterError(f"gen_binomial needs n >= 0, got {n}")
    result = 1.0
    for k in range(n):
        result *= (gamma_ - k) / (k + 1)
    return result


def binomial_weights(gamma_: float, n_max: int) -> np.ndarray:
    """Array of C(γ, n) for n = 0..n_max."""
    k = np.arange(n_max, dtype=float)
    factors = (gamma_ - k) / (k + 1)
    return np.concatenate(([1.0], np.cumprod(factors)))


def beta_complex(s1: complex, s2: complex) -> complex:
    """B(s1, s2) = Γ(s1)Γ(s2)/Γ(s1+s2) for Re s1, Re s2 > 0."""
    s1, s2 = complex(s1), complex(s2)
    if not (s1.real > 0 and s2.real > 0):
        raise ParameterError(f"beta_complex needs positive real parts, got {s1}, {s2}")
    return complex(np.exp(log_gamma(s1) + log_gamma(s2) - log_gamma(s1 + s2)))


def gamma_neg_real(x: float) -> float:
    """
    Γ(−x) for positive non-integer x from

        Γ(−x) = (−1)^{m+1} Γ(m+1−x) / (x(x−1)···(x−m)),  m = ⌊x⌋.
    """
    if not x > 0:
        raise ParameterError(f"gamma_neg_real needs x > 0, got {x}")
    if abs(x - round(x)) < 1e-12:
        raise IntegerArgumentError(f"gamma_neg_real needs a non-integer, got {x}")

    m = math.floor(x)
    denominator = math.prod(x - k for k in range(m + 1))
    return (-1) ** (m + 1) * float(sp.gamma(m + 1 - x)) / denominator


def d_factor(beta: float, n: int) -> float:
    """
    Denominator of the residue at s = β − n once n exceeds a non-integer β:

        d_{β,n} = (−1)^{[n−β]+1} Γ(β−n+1+[n−β]) / ((n−β)(n−β−1)···(n−β−[n−β])).
    """
    if is_integer(beta):
        raise IntegerArgumentError(f"d_factor needs a non-integer beta, got {beta}")
    if not n > beta:
        raise ParameterError(f"d_factor needs n > beta, got n={n}, beta={beta}")

    x = n - beta
    m = math.floor(x)
    denominator = math.prod(x - k for k in range(m + 1))
    return (-1) ** (m + 1) * float(sp.gamma(beta - n + 1 + m)) / denominator
