"""
Direct summation of the sinh-, cosh- and tanh-moment series in their
absolute-convergence half-planes.

Terms are summed over the box [0, N]^r in row-major order, each row with
math.fsum, so results are bit-reproducible for a fixed configuration. The
complement of the box is bounded by the absolute sinh series, whose total is
the Mellin integral ∫ x^{σ−1} e^{−bx} ∏(1−e^{−a_j x})^{−α_j} dx / Γ(σ).
"""

import logging
import math
from typing import Sequence

import numpy as np

from hyperzeta.domain.entities import (
    EvalMethod,
    EvalResult,
    Family,
    QuadConfig,
    SeriesConfig,
    ZetaParams,
)
from hyperzeta.domain.exceptions import (
    ConvergenceRegionError,
    ParameterError,
    TailToleranceError,
)
from hyperzeta.domain.services import special
from hyperzeta.domain.services.quadrature import integrate_halfline_mellin

__all__ = (
    "series_S",
    "series_C",
    "series_T",
    "term_T_expectation",
    "irwin_hall_pdf",
    "absolute_series_total",
    "CONVERGENCE_MARGIN",
)

logger = logging.getLogger(__name__)

CONVERGENCE_MARGIN = 0.5
MAX_DIMENSIONS = 3
OUTER_CHUNK = 1024


def _check(params: ZetaParams, s: complex, family: Family) -> None:
    if params.family is not family:
        raise ParameterError(
            f"series_{family.name[0]} needs the {family.value} family, got {params.family.value}"
        )
    if params.r > MAX_DIMENSIONS:
        raise ParameterError(f"direct summation supports r <= {MAX_DIMENSIONS}, got r={params.r}")
    if not complex(s).real > params.beta + CONVERGENCE_MARGIN:
        raise ConvergenceRegionError(
            f"series needs Re(s) > beta + {CONVERGENCE_MARGIN} = "
            f"{params.beta + CONVERGENCE_MARGIN:g}, got {complex(s).real:g}"
        )


def _weights(params: ZetaParams, cutoff: int, signed: bool) -> list[np.ndarray]:
    """C(−α_j, n) when signed, otherwise |C(−α_j, n)| = C(n+α_j−1, n)."""
    weights = []
    for alpha in params.alpha:
        w = special.binomial_weights(-alpha, cutoff)
        weights.append(w if signed else np.abs(w))
    return weights


def _box(params: ZetaParams, cutoff: int, weights: list[np.ndarray]):
    """Linear forms a·n + b and weight products over the index box."""
    n = np.arange(cutoff + 1, dtype=float)
    linear = np.full((cutoff + 1,) * params.r, params.b)
    product = np.ones((cutoff + 1,) * params.r)
    for j, (a, w) in enumerate(zip(params.a, weights)):
        shape = [1] * params.r
        shape[j] = cutoff + 1
        linear = linear + (a * n).reshape(shape)
        product = product * w.reshape(shape)
    return linear, product


def _row_fsum(terms: np.ndarray) -> complex:
    rows = terms.reshape(terms.shape[0], -1)
    real = math.fsum(math.fsum(row) for row in rows.real)
    imag = math.fsum(math.fsum(row) for row in rows.imag) if np.iscomplexobj(rows) else 0.0
    return complex(real, imag)


def absolute_series_total(
    params: ZetaParams, sigma: float, qcfg: QuadConfig
) -> tuple[float, float]:
    """
    Σ_n ∏ C(n_j+α_j−1, n_j)(a·n+b)^{−σ} and its error estimate, for real σ > β.
    """

    def log_g(x: np.ndarray) -> np.ndarray:
        total = np.zeros_like(x)
        for a, alpha in zip(params.a, params.alpha):
            total -= alpha * np.log(-np.expm1(-a * x))
        return total

    result = integrate_halfline_mellin(
        sigma, None, params.b, qcfg, singular_order=params.beta, log_g=log_g
    )
    scale = math.exp(-math.lgamma(sigma))
    return result.value.real * scale, result.err_estimate * scale


def _tail_bound(
    params: ZetaParams, sigma: float, partial_abs: float, cfg: SeriesConfig
) -> float:
    total, err = absolute_series_total(params, sigma, cfg.expectation_cfg)
    bound = max(total - partial_abs, 0.0) + err
    if bound > cfg.tail_tol:
        raise TailToleranceError(
            f"series tail bound {bound:.3g} exceeds tail_tol {cfg.tail_tol:.3g}",
            tail_bound=bound,
        )
    return bound


def _box_sum(params: ZetaParams, s: complex, cfg: SeriesConfig, signed: bool) -> EvalResult:
    s = complex(s)
    cutoff = cfg.cutoff_for(params.r)
    linear, product = _box(params, cutoff, _weights(params, cutoff, signed))
    log_linear = np.log(linear)

    value = _row_fsum(product * np.exp(-s * log_linear))
    partial_abs = _row_fsum(np.abs(product) * np.exp(-s.real * log_linear)).real
    tail = _tail_bound(params, s.real, partial_abs, cfg)
    roundoff = 4.0 * np.finfo(float).eps * partial_abs

    logger.debug(f"box sum with cutoff {cutoff}: tail bound {tail:.3g}")
    return EvalResult(value=value, err_estimate=tail + roundoff, method=EvalMethod.SERIES)


def series_S(params: ZetaParams, s: complex, cfg: SeriesConfig) -> EvalResult:
    """Truncated Σ ∏ C(n_j+α_j−1, n_j)/(a·n+b)^s."""
    _check(params, s, Family.SINH)
    return _box_sum(params, s, cfg, signed=False)


def series_C(params: ZetaParams, s: complex, cfg: SeriesConfig) -> EvalResult:
    """Truncated Σ ∏ C(−α_j, n_j)/(a·n+b)^s."""
    _check(params, s, Family.COSH)
    return _box_sum(params, s, cfg, signed=True)


def _uniform_transform(params: ZetaParams, x: np.ndarray) -> np.ndarray:
    """∏ E[e^{−a_j x V_j}] = ∏ ((1−e^{−a_j x})/(a_j x))^{α_j}."""
    total = np.ones_like(x)
    for a, alpha in zip(params.a, params.alpha):
        ax = a * x
        safe = np.where(ax > 0, ax, 1.0)
        ratio = np.where(ax > 0, -np.expm1(-safe) / safe, 1.0)
        total = total * ratio ** int(round(alpha))
    return total


def series_T(params: ZetaParams, s: complex, cfg: SeriesConfig) -> EvalResult:
    """
    Truncated Σ ∏ C(−α_j, n_j)·E{(a·(n+V)+b)^{−s}} over the index box.

    The box sum of expectations is one Mellin integral of the truncated
    generating function ∏_j Σ_{n≤N} C(−α_j, n) e^{−a_j n x}.
    """
    _check(params, s, Family.TANH)
    s = complex(s)
    cutoff = cfg.cutoff_for(params.r)
    weights = _weights(params, cutoff, signed=True)
    n = np.arange(cutoff + 1, dtype=float)

    def g(x: np.ndarray) -> np.ndarray:
        total = _uniform_transform(params, x)
        for a, w in zip(params.a, weights):
            partial = np.empty_like(x)
            for start in range(0, x.size, OUTER_CHUNK):
                chunk = x[start : start + OUTER_CHUNK]
                partial[start : start + OUTER_CHUNK] = np.exp(-a * np.outer(chunk, n)) @ w
            total = total * partial
        return total

    result = integrate_halfline_mellin(s, g, params.b, cfg.expectation_cfg)
    scale = special.rgamma(s)
    value = result.value * scale
    linear, product = _box(params, cutoff, weights)
    partial_abs = _row_fsum(np.abs(product) * np.exp(-s.real * np.log(linear))).real
    tail = _tail_bound(params, s.real, partial_abs, cfg)

    return EvalResult(
        value=value,
        err_estimate=tail + result.err_estimate * abs(scale),
        method=EvalMethod.SERIES,
    )


def term_T_expectation(
    params: ZetaParams, n: Sequence[int], s: complex, qcfg: QuadConfig
) -> complex:
    """
    E{(Σ a_j(n_j+V_j) + b)^{−s}} with V_j Irwin–Hall of order α_j, as

        Γ(s)^{−1} ∫ x^{s−1} e^{−(a·n+b)x} ∏((1−e^{−a_j x})/(a_j x))^{α_j} dx.
    """
    s = complex(s)
    if len(n) != params.r or any(int(k) < 0 for k in n):
        raise ParameterError(f"index vector must hold {params.r} nonnegative integers, got {n}")
    if s == 0:
        return 1 + 0j
    if not s.real > 0:
        raise ConvergenceRegionError(f"term expectation needs Re(s) > 0, got {s}")

    shift = math.fsum(a * int(k) for a, k in zip(params.a, n))

    def g(x: np.ndarray) -> np.ndarray:
        return np.exp(-shift * x) * _uniform_transform(params, x)

    result = integrate_halfline_mellin(s, g, params.b, qcfg)
    return result.value * special.rgamma(s)


def irwin_hall_pdf(order: int, v):
    """Density of the sum of `order` independent Uniform(0, 1) variables."""
    if order < 1:
        raise ParameterError(f"order must be at least 1, got {order}")
    arr = np.asarray(v, dtype=float)
    vs = np.atleast_1d(arr)

    total = np.zeros_like(vs)
    for k in range(order + 1):
        shifted = vs - k
        contribution = np.where(shifted > 0, np.maximum(shifted, 0.0) ** (order - 1), 0.0)
        total += (-1) ** k * math.comb(order, k) * contribution
    density = np.where((vs > 0) & (vs < order), total / math.factorial(order - 1), 0.0)
    density = np.maximum(density, 0.0)
    return float(density[0]) if arr.ndim == 0 else density
