"""
Reference values that share no density or quadrature code with the
evaluation engines: Euler–Maclaurin Hurwitz zeta, the eta identities,
brute-force summation and Monte Carlo expectations.
"""

import logging
import math
from typing import Callable, Sequence

import numpy as np
from scipy import special as sp
from scipy import stats

from config import settings
from hyperzeta.domain.entities import Family, MixtureSpec, OracleValue, ZetaParams
from hyperzeta.domain.exceptions import ParameterError, PoleError
from hyperzeta.domain.services.hyperdist import sample

__all__ = (
    "hurwitz_em",
    "eta_reference",
    "alternating_hurwitz",
    "series_brute_force",
    "mc_expectation",
    "mc_term_T",
    "ks_distance",
)

logger = logging.getLogger(__name__)

EM_TERMS = 12
EM_MIN_CUTOFF = 10
BRUTE_FORCE_MAX_R = 2
_BERNOULLI = sp.bernoulli(2 * EM_TERMS)


def hurwitz_em(s: complex, b: float) -> OracleValue:
    """
    ζ(s; b) by Euler–Maclaurin summation with twelve Bernoulli corrections:

        Σ_{n<N} (n+b)^{−s} + (N+b)^{1−s}/(s−1) + (N+b)^{−s}/2
            + Σ_k B_{2k}/(2k)! · s(s+1)···(s+2k−2) · (N+b)^{−s−2k+1}
    """
    s = complex(s)
    if not b > 0:
        raise ParameterError(f"hurwitz_em needs b > 0, got {b}")
    if abs(s - 1) < settings.POLE_RADIUS:
        raise PoleError("the Hurwitz zeta function has a pole at s = 1", location=1 + 0j)

    cutoff = max(EM_MIN_CUTOFF, math.ceil(2 * abs(s)))
    n = np.arange(cutoff, dtype=float)
    head = np.exp(-s * np.log(n + b))
    total = [head.sum()]

    edge = cutoff + b
    log_edge = math.log(edge)
    total.append(np.exp((1 - s) * log_edge) / (s - 1))
    total.append(0.5 * np.exp(-s * log_edge))

    rising = s
    last = 0j
    for k in range(1, EM_TERMS + 1):
        last = (
            _BERNOULLI[2 * k] / math.factorial(2 * k) * rising * np.exp((-s - 2 * k + 1) * log_edge)
        )
        total.append(last)
        rising *= (s + 2 * k - 1) * (s + 2 * k)

    value = complex(
        math.fsum(complex(t).real for t in total), math.fsum(complex(t).imag for t in total)
    )
    accuracy = max(abs(last), 4.0 * np.finfo(float).eps * float(np.abs(head).sum()))
    return OracleValue(value=value, claimed_accuracy=accuracy, source="euler-maclaurin")


def eta_reference(s: complex) -> OracleValue:
    """Dirichlet eta η(s) = (1 − 2^{1−s}) ζ(s), with η(1) = ln 2."""
    s = complex(s)
    if abs(s - 1) < settings.POLE_RADIUS:
        return OracleValue(
            value=complex(math.log(2.0)), claimed_accuracy=np.finfo(float).eps, source="ln2"
        )
    factor = 1 - np.exp((1 - s) * math.log(2.0))
    zeta = hurwitz_em(s, 1.0)
    return OracleValue(
        value=complex(factor * zeta.value),
        claimed_accuracy=abs(factor) * zeta.claimed_accuracy,
        source="eta-identity",
    )


def alternating_hurwitz(s: complex, b: float) -> OracleValue:
    """
    Σ (−1)^n (n+b)^{−s} from the even/odd split 2^{−s}[ζ(s; b/2) − ζ(s; (b+1)/2)],
    with the s = 1 limit ½[ψ((b+1)/2) − ψ(b/2)].
    """
    s = complex(s)
    if not b > 0:
        raise ParameterError(f"alternating_hurwitz needs b > 0, got {b}")
    if abs(s - 1) < settings.POLE_RADIUS:
        value = 0.5 * (sp.digamma(0.5 * (b + 1)) - sp.digamma(0.5 * b))
        return OracleValue(
            value=complex(value), claimed_accuracy=8 * np.finfo(float).eps, source="digamma"
        )

    even = hurwitz_em(s, 0.5 * b)
    odd = hurwitz_em(s, 0.5 * (b + 1))
    scale = np.exp(-s * math.log(2.0))
    return OracleValue(
        value=complex(scale * (even.value - odd.value)),
        claimed_accuracy=abs(scale) * (even.claimed_accuracy + odd.claimed_accuracy),
        source="even-odd-split",
    )


def series_brute_force(params: ZetaParams, s: complex, cutoff: int) -> OracleValue:
    """
    Plain summation over [0, cutoff]^r for the sinh and cosh families, r ≤ 2.

    claimed_accuracy is a heuristic: the outermost shell times cutoff/(σ − β).
    """
    s = complex(s)
    if params.family is Family.TANH:
        raise ParameterError("brute-force summation covers the sinh and cosh families")
    if params.r > BRUTE_FORCE_MAX_R:
        raise ParameterError(f"brute-force summation needs r <= {BRUTE_FORCE_MAX_R}")
    if not s.real > params.beta:
        raise ParameterError(f"brute-force summation needs Re(s) > beta, got {s}")

    n = np.arange(cutoff + 1, dtype=float)
    alternating = params.family is Family.COSH
    grids = np.meshgrid(*([n] * params.r), indexing="ij")
    linear = params.b + sum(a * grid for a, grid in zip(params.a, grids))
    weight = np.ones_like(linear)
    for alpha, grid in zip(params.alpha, grids):
        weight = weight * sp.binom(grid + alpha - 1, grid)
        if alternating:
            weight = weight * np.where(grid % 2 == 0, 1.0, -1.0)

    terms = weight * np.exp(-s * np.log(linear))
    value = complex(terms.sum())
    shell = np.max(np.array(grids), axis=0) == cutoff
    accuracy = float(np.abs(terms[shell]).sum()) * cutoff / (s.real - params.beta)
    return OracleValue(value=value, claimed_accuracy=accuracy, source="brute-force")


def _mean_with_error(values: np.ndarray, source: str) -> OracleValue:
    count = values.size
    spread = math.sqrt(np.var(values.real, ddof=1) + np.var(values.imag, ddof=1))
    return OracleValue(
        value=complex(values.mean()),
        claimed_accuracy=spread / math.sqrt(count),
        source=source,
    )


def mc_expectation(
    spec: MixtureSpec, shift: float, s: complex, count: int, seed: int
) -> OracleValue:
    """Sample mean of (shift + iY)^{−s}; the standard error is the claimed accuracy."""
    s = complex(s)
    draws = sample(spec, count, seed)
    if s == 0:
        return OracleValue(value=1 + 0j, claimed_accuracy=0.0, source="monte-carlo")
    values = np.exp(-s * np.log(shift + 1j * draws))
    return _mean_with_error(values, "monte-carlo")


def mc_term_T(
    params: ZetaParams, n: Sequence[int], s: complex, count: int, seed: int
) -> OracleValue:
    """Sample mean of (Σ a_j(n_j + V_j) + b)^{−s} with V_j Irwin–Hall of order α_j."""
    if params.family is not Family.TANH:
        raise ParameterError("mc_term_T needs the tanh family")
    s = complex(s)
    rng = np.random.default_rng(seed)
    total = np.full(count, params.b)
    for a, alpha, k in zip(params.a, params.alpha, n):
        v = rng.random((count, int(round(alpha)))).sum(axis=1)
        total += a * (int(k) + v)
    values = np.exp(-s * np.log(total.astype(complex)))
    return _mean_with_error(values, "monte-carlo")


def ks_distance(draws: np.ndarray, cdf: Callable[[np.ndarray], np.ndarray]) -> float:
    """Kolmogorov–Smirnov distance between the empirical law of draws and cdf."""
    return float(stats.kstest(np.asarray(draws, dtype=float), cdf).statistic)
