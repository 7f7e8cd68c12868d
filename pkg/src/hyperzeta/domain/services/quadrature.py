"""
Adaptive quadrature engines.

Every integrand is a vectorized callable: it receives a 1-D numpy array of
abscissae and returns an array of (complex) values of the same shape.

Panels are integrated with the embedded 7-point Gauss / 15-point Kronrod
pair; the QUADPACK heuristic turns |K15 − G7| into an error estimate. All
panels whose share of the error budget is exceeded are bisected in one
round, so each round costs a single integrand call.
"""

import logging
import math
from typing import Callable, Iterable

import numpy as np

from hyperzeta.domain.entities import QuadConfig, QuadResult
from hyperzeta.domain.exceptions import DivergenceError, MaxDepthError, ParameterError

__all__ = (
    "Integrand",
    "integrate_line",
    "integrate_interval",
    "integrate_halfline_mellin",
    "gauss_kronrod_panels",
    "kronrod_estimates",
    "NODES",
)

logger = logging.getLogger(__name__)

Integrand = Callable[[np.ndarray], np.ndarray]

# Kronrod nodes on [-1, 1] in increasing order, with the K15 and G7 weights;
# Gauss weights are zero on the Kronrod-only nodes.
_XK = np.array(
    [
        0.991455371120812639206854697526329,
        0.949107912342758524526189684047851,
        0.864864423359769072789712788640926,
        0.741531185599394439863864773280788,
        0.586087235467691130294144845693013,
        0.405845151377397166906606412076961,
        0.207784955007898467600689403773245,
        0.000000000000000000000000000000000,
    ]
)
_WK = np.array(
    [
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714,
    ]
)
_WG = np.array(
    [
        0.0,
        0.129484966168869693270611432679082,
        0.0,
        0.279705391489276667901467771423780,
        0.0,
        0.381830050505118944950369775488975,
        0.0,
        0.417959183673469387755102040816327,
    ]
)
NODES = np.concatenate((-_XK[:-1], _XK[::-1]))
KRONROD_WEIGHTS = np.concatenate((_WK[:-1], _WK[::-1]))
GAUSS_WEIGHTS = np.concatenate((_WG[:-1], _WG[::-1]))

_EPS = np.finfo(float).eps
_UFLOW = np.finfo(float).tiny

# geometric grading toward declared singular points: panels down to 2^-48 of the segment
GRADING_LEVELS = 48
MAX_PANELS = 400_000
MAX_TAIL_DOUBLINGS = 32


def gauss_kronrod_panels(
    f: Integrand, lo: np.ndarray, hi: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Integrate f over each [lo_i, hi_i].

    Returns (K15 values, error estimates, ∫|f| estimates) per panel.
    """
    centre = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    x = centre[:, None] + half[:, None] * NODES[None, :]

    with np.errstate(over="ignore", invalid="ignore", under="ignore"):
        fx = np.asarray(f(x.ravel()), dtype=complex).reshape(x.shape)
    if not np.all(np.isfinite(fx)):
        bad = x[~np.isfinite(fx)]
        raise DivergenceError(
            f"integrand is not finite at {bad.size} quadrature nodes (first at {bad[0]:.6g})"
        )

    return kronrod_estimates(fx, half)


def kronrod_estimates(
    fx: np.ndarray, half: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Panel sums from integrand samples fx[..., panel, node] and half-widths.

    Leading axes of fx are batched integrands sharing the same panels.
    """
    kronrod = half * (fx @ KRONROD_WEIGHTS)
    gauss = half * (fx @ GAUSS_WEIGHTS)
    resabs = np.abs(half) * (np.abs(fx) @ KRONROD_WEIGHTS)
    mean = 0.5 * (fx @ KRONROD_WEIGHTS)
    resasc = np.abs(half) * (np.abs(fx - mean[..., None]) @ KRONROD_WEIGHTS)

    err = np.abs(kronrod - gauss)
    with np.errstate(divide="ignore", invalid="ignore"):
        scaled = resasc * np.minimum(1.0, (200.0 * err / resasc) ** 1.5)
    err = np.where((resasc > 0) & (err > 0), scaled, err)
    roundoff = 50.0 * _EPS * resabs
    err = np.where(resabs > _UFLOW / (50.0 * _EPS), np.maximum(err, roundoff), err)

    return kronrod, err, resabs


def _graded_edges(
    left: float, right: float, grade_left: bool, grade_right: bool
) -> np.ndarray:
    """Breakpoints of [left, right], geometrically refined toward graded ends."""
    if not (grade_left or grade_right):
        return np.array([left, right])

    ratios = 2.0 ** -np.arange(GRADING_LEVELS + 1)
    if grade_left and grade_right:
        mid = 0.5 * (left + right)
        width = mid - left
        lower = left + width * ratios[::-1]
        upper = right - width * ratios
        return np.concatenate(([left], lower, upper[1:], [right]))

    width = right - left
    if grade_left:
        return np.concatenate(([left], left + width * ratios[::-1]))
    return np.concatenate((right - width * ratios, [right]))


def _adaptive(
    f: Integrand,
    edges: np.ndarray,
    cfg: QuadConfig,
    abs_tol: float,
) -> tuple[complex, float, float, int]:
    """
    Adaptive refinement over the panels given by consecutive edges.

    Returns (value, err_estimate, ∫|f| estimate, panels_used).
    """
    lo = np.asarray(edges[:-1], dtype=float)
    hi = np.asarray(edges[1:], dtype=float)
    keep = hi > lo
    lo, hi = lo[keep], hi[keep]
    depth = np.zeros(lo.shape, dtype=int)
    values, errors, absolute = gauss_kronrod_panels(f, lo, hi)

    rounds = 0
    while True:
        total = complex(np.sum(values))
        total_err = float(np.sum(errors))
        tol = max(abs_tol, cfg.rel_tol * abs(total))
        if total_err <= tol:
            break

        refine = errors > tol / len(errors)
        refine[np.argmax(errors)] = True
        refine &= depth < cfg.max_depth
        if not refine.any() or len(errors) + refine.sum() > MAX_PANELS:
            result = QuadResult(value=total, err_estimate=total_err, panels_used=len(errors))
            raise MaxDepthError(
                f"quadrature stopped at err={total_err:.3g} above tol={tol:.3g}",
                result=result,
            )

        mid = 0.5 * (lo[refine] + hi[refine])
        new_lo = np.concatenate((lo[refine], mid))
        new_hi = np.concatenate((mid, hi[refine]))
        new_values, new_errors, new_absolute = gauss_kronrod_panels(f, new_lo, new_hi)
        new_depth = np.concatenate((depth[refine], depth[refine])) + 1

        stay = ~refine
        lo = np.concatenate((lo[stay], new_lo))
        hi = np.concatenate((hi[stay], new_hi))
        depth = np.concatenate((depth[stay], new_depth))
        values = np.concatenate((values[stay], new_values))
        errors = np.concatenate((errors[stay], new_errors))
        absolute = np.concatenate((absolute[stay], new_absolute))

        rounds += 1
        logger.debug(
            f"refinement round {rounds}: {len(errors)} panels, err={total_err:.3g}, tol={tol:.3g}"
        )

    return complex(np.sum(values)), float(np.sum(errors)), float(np.sum(absolute)), len(errors)


def integrate_interval(
    f: Integrand,
    left: float,
    right: float,
    cfg: QuadConfig,
    *,
    grade_left: bool = False,
    grade_right: bool = False,
) -> QuadResult:
    """∫_left^right f, optionally graded toward endpoint singularities."""
    if not right > left:
        raise ParameterError(f"integration needs left < right, got [{left}, {right}]")
    edges = _graded_edges(left, right, grade_left, grade_right)
    value, err, _, panels = _adaptive(f, edges, cfg, cfg.abs_tol)
    return QuadResult(value=value, err_estimate=err, panels_used=panels)


def _tail(
    f: Integrand, start: float, direction: int, cfg: QuadConfig, threshold: float
) -> tuple[complex, float, float, int]:
    """
    ∫ from start to ±∞ by doubling segments until one contributes ∫|f| < threshold.

    Returns (value, err_estimate, truncation_bound, panels_used).
    """
    value, err, panels = 0j, 0.0, 0
    width = cfg.initial_radius
    for _ in range(MAX_TAIL_DOUBLINGS):
        near, far = start, start + direction * width
        edges = np.array(sorted((near, far)))
        seg_value, seg_err, seg_abs, seg_panels = _adaptive(f, edges, cfg, threshold)
        value += seg_value
        err += seg_err
        panels += seg_panels
        if seg_abs < threshold:
            logger.debug(f"tail closed at {far:.6g} with bound {seg_abs:.3g}")
            return value, err, seg_abs, panels
        start, width = far, 2.0 * width

    raise DivergenceError(
        f"integrand tail does not decay (still significant beyond {start:.6g})"
    )


def integrate_line(
    f: Integrand,
    cfg: QuadConfig,
    split_points: Iterable[float] = (),
    *,
    anchor: float | None = None,
) -> QuadResult:
    """
    ∫_ℝ f(y) dy.

    split_points are mandatory panel boundaries with geometric grading toward
    them (branch jumps, logarithmic singularities). Without split points the
    core interval is centred at anchor (default 0) and not graded. Tails are
    extended by radius doubling and the last segment's ∫|f| is reported as
    truncation_bound.
    """
    points = sorted({float(p) for p in split_points})
    graded = bool(points)
    if not points:
        points = [0.0 if anchor is None else float(anchor)]

    radius = cfg.initial_radius
    pieces = [_graded_edges(points[0] - radius, points[0], False, graded)]
    for p, q in zip(points, points[1:]):
        pieces.append(_graded_edges(p, q, graded, graded)[1:])
    pieces.append(_graded_edges(points[-1], points[-1] + radius, graded, False)[1:])
    edges = np.concatenate(pieces)

    core_value, core_err, _, core_panels = _adaptive(f, edges, cfg, 0.5 * cfg.abs_tol)

    threshold = max(cfg.abs_tol, cfg.rel_tol * abs(core_value)) / 10.0
    left_value, left_err, left_bound, left_panels = _tail(
        f, points[0] - radius, -1, cfg, threshold
    )
    right_value, right_err, right_bound, right_panels = _tail(
        f, points[-1] + radius, +1, cfg, threshold
    )

    truncation = left_bound + right_bound
    return QuadResult(
        value=core_value + left_value + right_value,
        err_estimate=core_err + left_err + right_err + truncation,
        panels_used=core_panels + left_panels + right_panels,
        truncation_bound=truncation,
    )


def integrate_halfline_mellin(
    s: complex,
    g: Callable[[np.ndarray], np.ndarray] | None,
    b: float,
    cfg: QuadConfig,
    *,
    singular_order: float = 0.0,
    log_g: Callable[[np.ndarray], np.ndarray] | None = None,
    lower: float = 0.0,
) -> QuadResult:
    """
    ∫_lower^∞ x^{s−1} e^{−bx} g(x) dx through x = e^u.

    singular_order is β_g in g(x) ~ x^{−β_g} as x → 0; the integral over
    (0, ∞) needs Re(s) > β_g. log_g may replace g when g overflows near 0.
    """
    s = complex(s)
    if not b > 0:
        raise ParameterError(f"integrate_halfline_mellin needs b > 0, got {b}")
    if g is None and log_g is None:
        raise ParameterError("integrate_halfline_mellin needs g or log_g")
    if lower < 0:
        raise ParameterError(f"lower limit must be nonnegative, got {lower}")
    if lower == 0 and s.real <= singular_order:
        raise DivergenceError(
            f"x^(s-1) g(x) is not integrable at 0: Re(s)={s.real:.6g} <= {singular_order:.6g}"
        )

    u_lower = math.log(lower) if lower > 0 else -math.inf

    def integrand(u: np.ndarray) -> np.ndarray:
        out = np.zeros(u.shape, dtype=complex)
        inside = u > u_lower
        uu = u[inside]
        x = np.exp(uu)
        if log_g is not None:
            out[inside] = np.exp(s * uu - b * x + log_g(x))
        else:
            out[inside] = np.exp(s * uu - b * x) * g(x)
        return out

    if lower > 0:
        return integrate_line(integrand, cfg, [u_lower])

    # centre the core window on the peak of |x^s e^{-bx}|
    peak = math.log(max(s.real - singular_order, 0.5) / b)
    return integrate_line(integrand, cfg, anchor=peak)
