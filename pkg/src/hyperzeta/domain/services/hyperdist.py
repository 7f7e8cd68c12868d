"""
Hyperbolic laws: characteristic functions, densities, moments and samplers.

The halved sinh/cosh/tanh variables of order t have characteristic functions
(θ/sinh θ)^t, sech^t θ and (tanh θ/θ)^t evaluated at θ/2. A MixtureSpec is
the law of Σ_j a_j X_j; its density is recovered by cosine inversion of the
characteristic function product.
"""

import functools
import logging
import math

import numpy as np
from scipy import special as sp

from hyperzeta.domain.entities import Family, MixtureSpec, QuadConfig
from hyperzeta.domain.exceptions import (
    DensityInversionError,
    NonIntegerOrderError,
    ParameterError,
    SingularPointError,
    SlowDecayError,
    UnsupportedFamilyError,
)
from hyperzeta.domain.services.quadrature import (
    NODES,
    integrate_line,
    kronrod_estimates,
)

__all__ = (
    "cf_component",
    "cf_mixture",
    "log_cf_mixture",
    "density_closed",
    "density_scaled_closed",
    "cdf_closed",
    "density_mixture",
    "has_closed_density",
    "mixture_density",
    "moment_mixture",
    "complex_moment",
    "log_cf_coefficients",
    "cf_taylor_coefficients",
    "cumulant",
    "moment_exact",
    "sample",
)

logger = logging.getLogger(__name__)

SMALL_THETA = 1e-4
NEGATIVE_CLIP = 1e-10
# a·θ/2 beyond this makes tanh(a·θ/2) equal to 1 in double precision
TANH_FLAT_ARGUMENT = 20.0
MAX_EXACT_ORDER = 170
MAX_INVERSION_PANELS = 1 << 15


def _as_array(x) -> tuple[np.ndarray, bool]:
    arr = np.asarray(x, dtype=float)
    return np.atleast_1d(arr), arr.ndim == 0


def _restore(values: np.ndarray, scalar: bool):
    return float(values[0]) if scalar else values


def _log_cf_base(family: Family, theta: np.ndarray) -> np.ndarray:
    """log of θ/sinh θ, sech θ or tanh θ/θ (order one)."""
    th = np.abs(theta)
    small = th < SMALL_THETA
    safe = np.where(small, 1.0, th)
    t2 = th * th

    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        if family is Family.SINH:
            large = np.log(safe) - safe - np.log(-np.expm1(-2.0 * safe)) + math.log(2.0)
            series = np.log1p(t2 * (-1 / 6 + t2 * (7 / 360 - t2 * 31 / 15120)))
        elif family is Family.COSH:
            return math.log(2.0) - th - np.log1p(np.exp(-2.0 * th))
        else:
            large = np.log(np.tanh(safe)) - np.log(safe)
            series = np.log1p(t2 * (-1 / 3 + t2 * (2 / 15 - t2 * 17 / 315)))

    return np.where(small, series, large)


def cf_component(family: Family, t: float, theta):
    """Characteristic function of the order-t hyperbolic variable at θ."""
    if not t > 0:
        raise ParameterError(f"order must be positive, got t={t}")
    th, scalar = _as_array(theta)
    return _restore(np.exp(t * _log_cf_base(family, th)), scalar)


def log_cf_mixture(spec: MixtureSpec, theta) -> np.ndarray:
    th, _ = _as_array(theta)
    total = np.zeros_like(th)
    for a, alpha in spec.components:
        total += alpha * _log_cf_base(spec.family, 0.5 * a * th)
    return total


def cf_mixture(spec: MixtureSpec, theta):
    """∏_j cf_component(family, α_j, a_j θ/2)."""
    th, scalar = _as_array(theta)
    return _restore(np.exp(log_cf_mixture(spec, th)), scalar)


def _x_over_sinh(x: np.ndarray, k: float) -> np.ndarray:
    """x / sinh(k x) for x > 0 without overflow."""
    u = k * x
    return x * np.exp(-u) / (-np.expm1(-2.0 * u)) * 2.0


def _sinh2_density(x: np.ndarray) -> np.ndarray:
    u = 0.5 * math.pi * np.abs(x)
    small = u < 1e-2
    safe = np.where(small, 1.0, u)
    e = np.exp(-2.0 * safe)
    # (u coth u − 1)/sinh²u written with e = exp(−2u)
    ratio_large = 4.0 * e * (safe * (1.0 + e) / (1.0 - e) - 1.0) / (1.0 - e) ** 2
    u2 = u * u
    ratio_small = 1 / 3 + u2 * (-2 / 15 + u2 * 2 / 63)
    return 0.5 * math.pi * np.where(small, ratio_small, ratio_large)


def _tanh2_density(x: np.ndarray, cfg: QuadConfig) -> np.ndarray:
    values = np.empty_like(x)
    for i, xi in enumerate(np.abs(x)):

        def integrand(y: np.ndarray, lower: float = xi) -> np.ndarray:
            out = np.zeros_like(y)
            inside = y > lower
            yy = y[inside]
            out[inside] = 0.5 * (yy - lower) * _x_over_sinh(yy, 0.5 * math.pi)
            return out

        values[i] = integrate_line(integrand, cfg, [xi]).value.real
    return values


def density_closed(family: Family, t: int, x, cfg: QuadConfig | None = None):
    """
    Density of the unscaled order-t variable for t in {1, 2}.

    The tanh order-2 density is the integral ∫_{|x|}^∞ y(y−|x|)/(2 sinh(πy/2)) dy.
    """
    if t not in (1, 2):
        raise ParameterError(f"closed-form densities exist for t in {{1, 2}}, got {t}")
    xs, scalar = _as_array(x)
    ax = np.abs(xs)

    with np.errstate(divide="ignore", over="ignore", invalid="ignore", under="ignore"):
        if family is Family.SINH and t == 1:
            e = np.exp(-math.pi * ax)
            values = math.pi * e / (1.0 + e) ** 2
        elif family is Family.SINH:
            values = _sinh2_density(ax)
        elif family is Family.COSH and t == 1:
            e = np.exp(-0.5 * math.pi * ax)
            values = e / (1.0 + e * e)
        elif family is Family.COSH:
            positive = ax > 0
            values = np.full_like(ax, 1.0 / math.pi)
            values[positive] = 0.5 * _x_over_sinh(ax[positive], 0.5 * math.pi)
        elif t == 1:
            if np.any(ax == 0):
                raise SingularPointError("the tanh order-1 density is unbounded at 0")
            e = np.exp(-0.5 * math.pi * ax)
            values = (np.log1p(e) - np.log1p(-e)) / math.pi
        else:
            values = _tanh2_density(ax, cfg or QuadConfig.default())

    return _restore(values, scalar)


def density_scaled_closed(family: Family, t: int, x, cfg: QuadConfig | None = None):
    """Density of half the order-t variable: 2·density_closed(family, t, 2x)."""
    xs, scalar = _as_array(x)
    return _restore(2.0 * density_closed(family, t, 2.0 * xs, cfg), scalar)


def cdf_closed(family: Family, x):
    """Distribution function of the halved order-1 sinh and cosh laws."""
    xs, scalar = _as_array(x)
    if family is Family.SINH:
        values = 0.5 * (1.0 + np.tanh(math.pi * xs))
    elif family is Family.COSH:
        values = 2.0 / math.pi * np.arctan(np.exp(math.pi * xs))
    else:
        raise UnsupportedFamilyError("no closed distribution function for the tanh law")
    return _restore(values, scalar)


def _cosine_tail(y: np.ndarray, theta: float, order: int) -> np.ndarray:
    """∫_Θ^∞ cos(yθ) θ^{−n} dθ for n = order ≥ 2."""
    out = np.empty_like(y)
    zero = y == 0
    out[zero] = theta ** (1 - order) / (order - 1)

    yy = y[~zero]
    z = yy * theta
    si, ci = sp.sici(z)
    cos_part, sin_part = -ci, 0.5 * math.pi - si
    cos_z, sin_z = np.cos(z), np.sin(z)
    for n in range(2, order + 1):
        power = theta ** (1 - n)
        cos_part, sin_part = (
            (cos_z * power - yy * sin_part) / (n - 1),
            (sin_z * power + yy * cos_part) / (n - 1),
        )
    out[~zero] = cos_part
    return out


def _inversion_window(spec: MixtureSpec, tol: float) -> tuple[float, float]:
    """Upper limit Θ of the inversion integral and a bound on the discarded tail."""
    if spec.family is Family.TANH:
        return 2.0 * TANH_FLAT_ARGUMENT / spec.min_weight, 0.0

    target = math.log(tol)
    theta = 1.0
    while log_cf_mixture(spec, theta)[0] > target:
        theta *= 2.0
    log_half, log_full = log_cf_mixture(spec, [0.5 * theta, theta])
    rate = (log_half - log_full) / (0.5 * theta)
    return theta, math.exp(log_full) / rate


def _invert(spec: MixtureSpec, y: np.ndarray, cfg: QuadConfig) -> tuple[np.ndarray, float]:
    theta_max, tail_bound = _inversion_window(spec, 1e-2 * cfg.abs_tol)
    y_scale = max(1.0, float(np.max(y)))
    width = min(theta_max / 8.0, 0.5 * math.pi / y_scale, 2.0 / spec.max_weight)
    panels = min(max(8, math.ceil(theta_max / width)), MAX_INVERSION_PANELS)
    tol = math.pi * cfg.abs_tol

    if spec.family is Family.TANH:
        constant = math.exp(
            math.fsum(alpha * math.log(2.0 / a) for a, alpha in spec.components)
        )
        tail = constant * _cosine_tail(y, theta_max, int(round(spec.beta)))
    else:
        tail = np.zeros_like(y)

    for _ in range(cfg.max_depth):
        edges = np.linspace(0.0, theta_max, panels + 1)
        half = 0.5 * np.diff(edges)
        nodes = (0.5 * (edges[:-1] + edges[1:]))[:, None] + half[:, None] * NODES[None, :]
        weights = np.exp(log_cf_mixture(spec, nodes.ravel())).reshape(nodes.shape)

        values = np.empty_like(y)
        errors = np.empty_like(y)
        for start in range(0, len(y), 64):
            chunk = y[start : start + 64]
            fx = np.cos(chunk[:, None, None] * nodes[None, :, :]) * weights[None, :, :]
            kronrod, err, _ = kronrod_estimates(fx, half)
            values[start : start + 64] = kronrod.sum(axis=-1)
            errors[start : start + 64] = err.sum(axis=-1)

        if errors.max() <= tol or panels >= MAX_INVERSION_PANELS:
            break
        panels *= 2

    if errors.max() > tol:
        logger.warning(
            f"density inversion unconverged: err={errors.max():.3g} above {tol:.3g}"
        )

    density = (values + tail) / math.pi
    return density, (errors.max() + tail_bound) / math.pi


def density_mixture(spec: MixtureSpec, y, cfg: QuadConfig):
    """
    (1/π)∫_0^∞ cos(θy)·cf_mixture(θ) dθ, clipped at zero.

    The tanh family needs β ≥ 2; its characteristic function equals
    K·θ^{−β} beyond Θ = 40/min a_j and that tail is integrated exactly.
    """
    if spec.family is Family.TANH and spec.beta < 2:
        raise SlowDecayError(
            "tanh characteristic functions with beta < 2 are not absolutely integrable"
        )
    ys, scalar = _as_array(y)
    density, _ = _invert(spec, np.abs(ys), cfg)

    if np.any(density < -NEGATIVE_CLIP):
        worst = float(density.min())
        raise DensityInversionError(f"inverted density is negative ({worst:.3g})")
    return _restore(np.maximum(density, 0.0), scalar)


def has_closed_density(spec: MixtureSpec) -> bool:
    """Single sinh/cosh components of order 1 or 2 and the single tanh component of order 1."""
    if spec.r != 1:
        return False
    alpha = spec.components[0][1]
    closed_orders = (1,) if spec.family is Family.TANH else (1, 2)
    return round(alpha) in closed_orders and abs(alpha - round(alpha)) < 1e-9


def mixture_density(spec: MixtureSpec, y, cfg: QuadConfig):
    """Density of the mixture, taking closed forms where they exist and inverting otherwise."""
    ys, scalar = _as_array(y)
    if has_closed_density(spec):
        a, alpha = spec.components[0]
        values = density_scaled_closed(spec.family, int(round(alpha)), ys / a) / a
        return _restore(np.asarray(values), scalar)
    return _restore(np.atleast_1d(density_mixture(spec, ys, cfg)), scalar)


@functools.lru_cache(maxsize=256)
def moment_mixture(spec: MixtureSpec, k: int, cfg: QuadConfig) -> float:
    """E[Y^k]; zero for odd k, quadrature of y^k f(y) for even k."""
    if k < 0:
        raise ParameterError(f"moment order must be nonnegative, got {k}")
    if k == 0:
        return 1.0
    if k % 2 == 1:
        return 0.0

    wide = cfg.replace(initial_radius=2.0 * cfg.initial_radius)

    def integrand(y: np.ndarray) -> np.ndarray:
        return y**k * np.atleast_1d(mixture_density(spec, y, cfg))

    return integrate_line(integrand, wide, [0.0]).value.real


def complex_moment(spec: MixtureSpec, c: float, n: int, cfg: QuadConfig) -> complex:
    """E[(c+iY)^n] = Σ_{k even} C(n,k) c^{n−k} (−1)^{k/2} E[Y^k]."""
    if c == 0:
        raise ParameterError("complex_moment needs c != 0")
    if n < 0:
        raise ParameterError(f"moment order must be nonnegative, got {n}")
    terms = [
        math.comb(n, k) * c ** (n - k) * (-1) ** (k // 2) * moment_mixture(spec, k, cfg)
        for k in range(0, n + 1, 2)
    ]
    return complex(math.fsum(terms))


def log_cf_coefficients(spec: MixtureSpec, order: int) -> np.ndarray:
    """
    Taylor coefficients ℓ_0..ℓ_order of log cf_mixture(θ) at θ = 0.

    With q_j = a_j/(2π):
        sinh  ℓ_2k = (−1)^k ζ(2k)/k · Σ α_j q_j^{2k}
        cosh  ℓ_2k = (−1)^k ζ(2k)/k · Σ α_j ((2q_j)^{2k} − q_j^{2k})
        tanh  ℓ_2k = (−1)^k ζ(2k)/k · Σ α_j ((2q_j)^{2k} − 2 q_j^{2k})
    """
    coefficients = np.zeros(order + 1)
    for k in range(1, order // 2 + 1):
        total = 0.0
        for a, alpha in spec.components:
            q = a / (2.0 * math.pi)
            base = q ** (2 * k)
            if spec.family is Family.SINH:
                total += alpha * base
            elif spec.family is Family.COSH:
                total += alpha * ((2.0 * q) ** (2 * k) - base)
            else:
                total += alpha * ((2.0 * q) ** (2 * k) - 2.0 * base)
        coefficients[2 * k] = (-1) ** k * float(sp.zeta(2 * k)) / k * total
    return coefficients


def cf_taylor_coefficients(spec: MixtureSpec, order: int) -> np.ndarray:
    """Taylor coefficients p_0..p_order of cf_mixture(θ), from exp of the log series."""
    log_coefficients = log_cf_coefficients(spec, order)
    p = np.zeros(order + 1)
    p[0] = 1.0
    for n in range(1, order + 1):
        k = np.arange(1, n + 1)
        p[n] = np.dot(k * log_coefficients[1 : n + 1], p[n - 1 :: -1][: n]) / n
    return p


def _check_exact_order(k: int) -> None:
    if not 0 <= k <= MAX_EXACT_ORDER:
        raise ParameterError(f"exact order must be in [0, {MAX_EXACT_ORDER}], got {k}")


def cumulant(spec: MixtureSpec, k: int) -> float:
    """Exact cumulant κ_k; zero for odd k."""
    _check_exact_order(k)
    if k == 0 or k % 2 == 1:
        return 0.0
    return float(log_cf_coefficients(spec, k)[k] * math.factorial(k) * (-1) ** (k // 2))


def moment_exact(spec: MixtureSpec, k: int) -> float:
    """Exact moment E[Y^k] from the characteristic function series."""
    _check_exact_order(k)
    if k % 2 == 1:
        return 0.0
    return float(cf_taylor_coefficients(spec, k)[k] * math.factorial(k) * (-1) ** (k // 2))


def _inverse_cdf(family: Family, u: np.ndarray) -> np.ndarray:
    if family is Family.SINH:
        return np.arctanh(2.0 * u - 1.0) / math.pi
    return np.log(np.tan(0.5 * math.pi * u)) / math.pi


def sample(spec: MixtureSpec, count: int, seed: int) -> np.ndarray:
    """
    count i.i.d. draws of Σ a_j X_j from a private generator seeded by seed.

    An order-t component is the sum of t independent order-one draws.
    """
    if spec.family is Family.TANH:
        raise UnsupportedFamilyError("sampling is available for sinh and cosh mixtures")
    if not spec.has_integer_orders:
        raise NonIntegerOrderError("sampling needs integer orders")
    if count < 1:
        raise ParameterError(f"count must be positive, got {count}")

    rng = np.random.default_rng(seed)
    edge = np.finfo(float).eps
    total = np.zeros(count)
    for a, alpha in spec.components:
        u = np.clip(rng.random((count, int(round(alpha)))), edge, 1.0 - edge)
        total += a * _inverse_cdf(spec.family, u).sum(axis=1)
    return total
