"""
Evaluation of the sinh-, cosh- and tanh-moment zeta functions anywhere in ℂ.

Three paths are available:

* integral: the expectation representations
      S(s) = c_r Γ(s−β)/Γ(s) · E{(c+iY)^{β−s}},
      C(s) = 2^{−β} E{(c+iZ)^{−s}},
      T(s) = 2^{−β} E{(b+iW)^{−s}},
  integrated against the mixture density. The expectation form of S and C
  needs c > 0; with c < 0 both are routed to the Mellin continuation.
* mellin: Γ(s)X(s) = pref · ∫_0^∞ x^{w−1} G(x) dx with G(x) = e^{−ρx}φ(x),
  φ the characteristic function of the mixture. The piece over [0, x0] is
  integrated term by term from the Taylor series of G, which continues it to
  every w; the piece over [x0, ∞) is entire in w.
* series: direct summation, only in the absolute-convergence half-plane.

dispatch() selects a path or runs all legal ones and compares them.
"""

import itertools
import logging
import math
from typing import Callable, Sequence

import numpy as np

from config import settings
from shared.domain.exceptions import DomainException
from hyperzeta.domain.entities import (
    EvalMethod,
    EvalMode,
    EvalResult,
    Family,
    MixtureSpec,
    PoleEntry,
    PoleKind,
    PoleReport,
    QuadConfig,
    QuadResult,
    SeriesConfig,
    ZetaParams,
)
from hyperzeta.domain.exceptions import (
    AtPoleError,
    DisagreementError,
    MaxDepthError,
    ParameterError,
    TailToleranceError,
)
from hyperzeta.domain.services import hyperdist, series, special
from hyperzeta.domain.services.quadrature import (
    integrate_halfline_mellin,
    integrate_line,
)

__all__ = (
    "eval_S",
    "eval_C",
    "eval_T",
    "eval_mellin",
    "evaluate",
    "poles_S",
    "residue_check",
    "barnes",
    "hurwitz",
    "zeta2",
    "barnes_alternating",
    "eta_shift",
    "eta2_shift",
    "tanh_barnes",
    "tanh_hurwitz",
    "tanh_zeta2",
    "dispatch",
    "series_legal",
)

logger = logging.getLogger(__name__)

NEGATIVE_C_NOTE = "c < 0: evaluated through the Mellin continuation"
INVERTED_GROWTH_NOTE = (
    "growth too steep for an inverted density: evaluated through the Mellin continuation"
)
AUTO_FALLBACK_NOTE = "series tail above tail_tol: integrated instead"
# largest Re of the expectation exponent integrated against an inverted density;
# beyond it the inversion noise floor times |y|^exponent dominates the tails
MAX_INVERTED_GROWTH = 2.0
# relative size below which two consecutive Taylor terms end the sum
TAYLOR_STOP = 1e-17
MAX_TAYLOR_TERMS = 400
AUTO_SERIES_MARGIN = 1.0
AUTO_SERIES_MAX_R = 2
VERIFY_FACTOR = 10.0
ROUNDOFF_FLOOR = 64.0 * np.finfo(float).eps
MAX_RESIDUE_STEP = 0.01


def _require(params: ZetaParams, family: Family) -> None:
    if params.family is not family:
        raise ParameterError(f"expected the {family.value} family, got {params.family.value}")


def _integrate(run: Callable[[], QuadResult], notes: list[str]) -> QuadResult:
    """Run a quadrature, keeping the partial result when refinement stalls."""
    try:
        return run()
    except MaxDepthError as e:
        logger.warning(f"using unconverged quadrature result: {e}")
        notes.append(f"quadrature unconverged: {e}")
        return e.result


def _expectation(
    spec: MixtureSpec, shift: float, exponent: complex, cfg: QuadConfig, notes: list[str]
) -> QuadResult:
    """E{(shift + iY)^exponent} against the mixture density."""

    def integrand(y: np.ndarray) -> np.ndarray:
        power = special.complex_pow(shift + 1j * y, exponent)
        return power * np.atleast_1d(hyperdist.mixture_density(spec, y, cfg))

    # y = 0 is the branch point when shift < 0 and the log singularity of h_1
    return _integrate(lambda: integrate_line(integrand, cfg, [0.0]), notes)


def _needs_continuation(spec: MixtureSpec, exponent: complex) -> bool:
    if complex(exponent).real <= MAX_INVERTED_GROWTH:
        return False
    return not hyperdist.has_closed_density(spec)


# ---------------------------------------------------------------- poles


def _pole_index(params: ZetaParams, s: complex) -> int | None:
    """n such that s lies within the pole radius of β − n, if s is at a pole of S."""
    radius = settings.POLE_RADIUS
    beta = params.beta
    if params.has_integer_beta:
        k = round(s.real)
        if 1 <= k <= round(beta) and abs(s - k) < radius:
            return int(round(beta)) - k
        return None
    n = round(beta - s.real)
    if n >= 0 and abs(s - (beta - n)) < radius:
        return int(n)
    return None


def _residue(params: ZetaParams, n: int, cfg: QuadConfig) -> tuple[float, PoleKind]:
    """Residue of S at β − n."""
    moment = hyperdist.complex_moment(params.mixture(), params.c, n, cfg).real
    numerator = params.c_r * (-1) ** n * moment / math.factorial(n)
    beta = params.beta

    if params.has_integer_beta:
        return numerator / math.factorial(int(round(beta)) - 1 - n), PoleKind.INTEGER_CASE
    if n < beta:
        return numerator / special.gamma(beta - n).real, PoleKind.NONINTEGER_CASE_I
    return numerator / special.d_factor(beta, n), PoleKind.NONINTEGER_CASE_II


def _raise_if_pole(params: ZetaParams, s: complex, cfg: QuadConfig) -> None:
    n = _pole_index(params, s)
    if n is None:
        return
    location = params.beta - n
    residue, _ = _residue(params, n, cfg)
    raise AtPoleError(
        f"s={s} is a pole of the sinh-moment zeta function",
        pole=location,
        residue=residue,
    )


def poles_S(
    params: ZetaParams, n_max: int | None = None, cfg: QuadConfig | None = None
) -> PoleReport:
    """
    Simple poles of S with their residues, in decreasing order.

    Integer β gives the poles 1, …, β. Non-integer β gives β − n for
    n = 0, …, n_max.
    """
    _require(params, Family.SINH)
    cfg = cfg or QuadConfig.default()
    n_max = settings.N_MAX if n_max is None else n_max
    if n_max < 0:
        raise ParameterError(f"n_max must be nonnegative, got {n_max}")

    if params.has_integer_beta:
        indices = range(int(round(params.beta)))
    else:
        indices = range(n_max + 1)

    entries = []
    for n in indices:
        residue, kind = _residue(params, n, cfg)
        location = float(round(params.beta) - n) if params.has_integer_beta else params.beta - n
        entries.append(PoleEntry(location=location, residue=residue, kind=kind))
    return PoleReport(entries=tuple(entries))


def residue_check(
    params: ZetaParams, pole: float, h: float = 1e-3, cfg: QuadConfig | None = None
) -> float:
    """
    Numeric limit of (s − pole)·S(s).

    The symmetric difference A(h) = h·(S(p+h) − S(p−h))/2 carries only even
    powers of h, so (4A(h/2) − A(h))/3 is accurate to O(h⁴).
    """
    if not 0 < h <= MAX_RESIDUE_STEP:
        raise ParameterError(f"h must lie in (0, {MAX_RESIDUE_STEP}], got {h}")
    cfg = cfg or QuadConfig.default()

    def symmetric(step: float) -> complex:
        upper = eval_S(params, pole + step, cfg).value
        lower = eval_S(params, pole - step, cfg).value
        return 0.5 * step * (upper - lower)

    return ((4.0 * symmetric(0.5 * h) - symmetric(h)) / 3.0).real


# ---------------------------------------------------------------- Mellin continuation


def _mellin_setup(params: ZetaParams):
    """(prefactor, shift of w against s, exponential rate ρ of G, Taylor radius, log_g)."""
    spec = params.mixture()
    a_max = max(params.a)

    if params.family is Family.TANH:

        def log_g(x: np.ndarray) -> np.ndarray:
            return hyperdist.log_cf_mixture(spec, x)

        return 2.0**-params.beta, 0.0, params.b, math.pi / a_max, log_g

    lam = params.lam

    def log_g(x: np.ndarray) -> np.ndarray:
        # e^{−cx} = e^{−bx}·e^{λx}; the e^{−bx} factor is applied by the integrator
        return lam * x + hyperdist.log_cf_mixture(spec, x)

    if params.family is Family.SINH:
        return params.c_r, params.beta, params.c, 2.0 * math.pi / a_max, log_g
    return 2.0**-params.beta, 0.0, params.c, math.pi / a_max, log_g


def _taylor_coefficients(spec: MixtureSpec, rate: float, scale: float, order: int) -> np.ndarray:
    """Coefficients of G(scale·t) = e^{−ρ scale t} φ(scale t) in powers of t."""
    p = hyperdist.cf_taylor_coefficients(spec, order) * scale ** np.arange(order + 1)
    e = np.empty(order + 1)
    e[0] = 1.0
    for k in range(1, order + 1):
        e[k] = e[k - 1] * (-rate * scale) / k
    return np.convolve(p, e)[: order + 1]


def eval_mellin(params: ZetaParams, s: complex, cfg: QuadConfig | None = None) -> EvalResult:
    """
    Γ(s)^{−1} ∫_0^∞ x^{s−1} e^{−bx} g(x) dx continued to all of ℂ.

    g is ∏(1−e^{−a_j x})^{−α_j}, ∏(1+e^{−a_j x})^{−α_j} or
    2^{−β}∏(tanh(a_j x/2)/(a_j x/2))^{α_j} by family.
    """
    cfg = cfg or QuadConfig.default()
    s = complex(s)
    if params.family is Family.SINH:
        _raise_if_pole(params, s, cfg)

    prefactor, shift, rate, radius, log_g = _mellin_setup(params)
    spec = params.mixture()
    w = s - shift
    x0 = min(0.5 * radius, 2.0 / abs(rate)) if rate != 0 else 0.5 * radius

    # s = −m with w + k = 0: 1/Γ(s) cancels the pole of the k-th term
    m = special.nonpositive_integer_near(s)
    if m is not None:
        k = -m + shift
        if special.is_integer(k):
            k = int(round(k))
            g_k = _taylor_coefficients(spec, rate, 1.0, k)[k]
            value = prefactor * (-1) ** (-m) * math.factorial(-m) * g_k
            return EvalResult(
                value=complex(value),
                err_estimate=ROUNDOFF_FLOOR * abs(value),
                method=EvalMethod.MELLIN,
            )
        return EvalResult(value=0j, err_estimate=0.0, method=EvalMethod.MELLIN)

    h = _taylor_coefficients(spec, rate, x0, MAX_TAYLOR_TERMS)
    k_min = max(0, math.ceil(-w.real)) + 2
    terms: list[complex] = []
    truncation = math.inf
    for k in range(MAX_TAYLOR_TERMS + 1):
        terms.append(h[k] / (w + k))
        if k >= k_min:
            size = abs(complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms)))
            if max(abs(terms[-1]), abs(terms[-2])) <= TAYLOR_STOP * max(size, 1e-300):
                truncation = 2.0 * abs(terms[-1])
                break
    else:
        truncation = 2.0 * abs(terms[-1])
        logger.warning(f"Taylor part of the Mellin integral truncated at {MAX_TAYLOR_TERMS} terms")

    head_sum = complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
    x0_w = complex(np.exp(w * math.log(x0)))
    head = x0_w * head_sum

    notes: list[str] = []
    tail = _integrate(
        lambda: integrate_halfline_mellin(w, None, params.b, cfg, log_g=log_g, lower=x0), notes
    )
    scale = prefactor * special.rgamma(s)
    value = scale * (head + tail.value)
    err = abs(scale) * (abs(x0_w) * truncation + tail.err_estimate) + ROUNDOFF_FLOOR * abs(value)
    logger.debug(f"mellin continuation: x0={x0:.4g}, {len(terms)} Taylor terms")
    return EvalResult(
        value=value, err_estimate=err, method=EvalMethod.MELLIN, warnings=tuple(notes)
    )


# ---------------------------------------------------------------- integral representations


def eval_S(params: ZetaParams, s: complex, cfg: QuadConfig | None = None) -> EvalResult:
    """c_r Γ(s−β)/Γ(s) ∫ (c+iy)^{β−s} f_Y(y) dy, meromorphic in s."""
    _require(params, Family.SINH)
    cfg = cfg or QuadConfig.default()
    s = complex(s)
    _raise_if_pole(params, s, cfg)

    if params.c < 0:
        return eval_mellin(params, s, cfg).with_warnings(NEGATIVE_C_NOTE)

    ratio = special.gamma_ratio(s, params.beta)
    if ratio == 0:
        return EvalResult(value=0j, err_estimate=0.0, method=EvalMethod.INTEGRAL)

    if _needs_continuation(params.mixture(), params.beta - s):
        return eval_mellin(params, s, cfg).with_warnings(INVERTED_GROWTH_NOTE)

    notes: list[str] = []
    quad = _expectation(params.mixture(), params.c, params.beta - s, cfg, notes)
    scale = params.c_r * ratio
    return EvalResult(
        value=scale * quad.value,
        err_estimate=abs(scale) * quad.err_estimate,
        method=EvalMethod.INTEGRAL,
        warnings=tuple(notes),
    )


def eval_C(params: ZetaParams, s: complex, cfg: QuadConfig | None = None) -> EvalResult:
    """2^{−β} ∫ (c+iz)^{−s} f_Z(z) dz, entire in s."""
    _require(params, Family.COSH)
    cfg = cfg or QuadConfig.default()
    s = complex(s)
    prefactor = 2.0**-params.beta
    if s == 0:
        return EvalResult(value=complex(prefactor), err_estimate=0.0, method=EvalMethod.INTEGRAL)
    if params.c < 0:
        return eval_mellin(params, s, cfg).with_warnings(NEGATIVE_C_NOTE)
    if _needs_continuation(params.mixture(), -s):
        return eval_mellin(params, s, cfg).with_warnings(INVERTED_GROWTH_NOTE)

    notes: list[str] = []
    quad = _expectation(params.mixture(), params.c, -s, cfg, notes)
    return EvalResult(
        value=prefactor * quad.value,
        err_estimate=prefactor * quad.err_estimate,
        method=EvalMethod.INTEGRAL,
        warnings=tuple(notes),
    )


def eval_T(params: ZetaParams, s: complex, cfg: QuadConfig | None = None) -> EvalResult:
    """2^{−β} ∫ (b+iw)^{−s} f_W(w) dw, entire in s."""
    _require(params, Family.TANH)
    cfg = cfg or QuadConfig.default()
    s = complex(s)
    prefactor = 2.0**-params.beta
    if s == 0:
        return EvalResult(value=complex(prefactor), err_estimate=0.0, method=EvalMethod.INTEGRAL)
    if _needs_continuation(params.mixture(), -s):
        return eval_mellin(params, s, cfg).with_warnings(INVERTED_GROWTH_NOTE)

    notes: list[str] = []
    quad = _expectation(params.mixture(), params.b, -s, cfg, notes)
    return EvalResult(
        value=prefactor * quad.value,
        err_estimate=prefactor * quad.err_estimate,
        method=EvalMethod.INTEGRAL,
        warnings=tuple(notes),
    )


_EVALUATORS = {
    Family.SINH: eval_S,
    Family.COSH: eval_C,
    Family.TANH: eval_T,
}

_SERIES = {
    Family.SINH: series.series_S,
    Family.COSH: series.series_C,
    Family.TANH: series.series_T,
}


def evaluate(params: ZetaParams, s: complex, cfg: QuadConfig | None = None) -> EvalResult:
    """Integral representation of whichever family params carries."""
    return _EVALUATORS[params.family](params, s, cfg)


# ---------------------------------------------------------------- special cases


def _unit(family: Family, a: Sequence[float], b: float) -> ZetaParams:
    return ZetaParams(family, [1.0] * len(a), a, b)


def barnes(s: complex, a: Sequence[float], b: float, cfg: QuadConfig | None = None) -> EvalResult:
    """Barnes multiple zeta Σ (a·n + b)^{−s}."""
    return eval_S(_unit(Family.SINH, a, b), s, cfg)


def hurwitz(s: complex, b: float, cfg: QuadConfig | None = None) -> EvalResult:
    """Hurwitz zeta ζ(s; b); b = 1/2 is rejected since c = 0 there."""
    return eval_S(_unit(Family.SINH, [1.0], b), s, cfg)


def zeta2(s: complex, b: float, cfg: QuadConfig | None = None) -> EvalResult:
    """Σ_{n≥1} n/(n+b−1)^s as the double Barnes function with unit weights."""
    return eval_S(_unit(Family.SINH, [1.0, 1.0], b), s, cfg)


def barnes_alternating(
    s: complex, a: Sequence[float], b: float, cfg: QuadConfig | None = None
) -> EvalResult:
    """Σ (−1)^{n_1+…+n_r} (a·n + b)^{−s}."""
    return eval_C(_unit(Family.COSH, a, b), s, cfg)


def eta_shift(s: complex, b: float, cfg: QuadConfig | None = None) -> EvalResult:
    """Σ (−1)^n (n+b)^{−s}."""
    return eval_C(_unit(Family.COSH, [1.0], b), s, cfg)


def eta2_shift(s: complex, b: float, cfg: QuadConfig | None = None) -> EvalResult:
    """Σ (−1)^n (n+1)(n+b)^{−s}."""
    return eval_C(_unit(Family.COSH, [1.0, 1.0], b), s, cfg)


def tanh_barnes(
    s: complex, a: Sequence[float], b: float, cfg: QuadConfig | None = None
) -> EvalResult:
    return eval_T(_unit(Family.TANH, a, b), s, cfg)


def tanh_hurwitz(s: complex, b: float, cfg: QuadConfig | None = None) -> EvalResult:
    """Σ (−1)^n E{(n+U+b)^{−s}} with U uniform on (0, 1)."""
    return eval_T(_unit(Family.TANH, [1.0], b), s, cfg)


def tanh_zeta2(s: complex, b: float, cfg: QuadConfig | None = None) -> EvalResult:
    return eval_T(_unit(Family.TANH, [1.0, 1.0], b), s, cfg)


# ---------------------------------------------------------------- dispatch


def series_legal(params: ZetaParams, s: complex) -> bool:
    return (
        complex(s).real > params.beta + series.CONVERGENCE_MARGIN
        and params.r <= series.MAX_DIMENSIONS
    )


def _verify(
    params: ZetaParams, s: complex, qcfg: QuadConfig, scfg: SeriesConfig
) -> EvalResult:
    results: dict[str, EvalResult] = {"integral": evaluate(params, s, qcfg)}
    skipped: list[str] = []

    if results["integral"].method is not EvalMethod.MELLIN:
        results["mellin"] = eval_mellin(params, s, qcfg)
    if series_legal(params, s):
        try:
            results["series"] = _SERIES[params.family](params, s, scfg)
        except DomainException as e:
            skipped.append(f"series path skipped: {e}")
    else:
        skipped.append("series path skipped: outside the convergence region")

    discrepancy = 0.0
    for (name_1, r_1), (name_2, r_2) in itertools.combinations(results.items(), 2):
        gap = abs(r_1.value - r_2.value)
        allowed = VERIFY_FACTOR * (r_1.err_estimate + r_2.err_estimate) + ROUNDOFF_FLOOR * max(
            abs(r_1.value), abs(r_2.value)
        )
        discrepancy = max(discrepancy, gap)
        if gap > allowed:
            raise DisagreementError(
                f"{name_1} and {name_2} paths disagree by {gap:.3g} (allowed {allowed:.3g})",
                details={
                    "paths": [name_1, name_2],
                    "discrepancy": gap,
                    "allowed": allowed,
                },
            )

    summary = f"verify: max discrepancy {discrepancy:.3g} across {', '.join(results)}"
    logger.info(summary)
    primary = results["integral"]
    return primary.with_warnings(summary, *skipped)


def dispatch(
    params: ZetaParams,
    s: complex,
    mode: EvalMode | str = EvalMode.AUTO,
    qcfg: QuadConfig | None = None,
    scfg: SeriesConfig | None = None,
) -> EvalResult:
    """
    Evaluate by the requested path.

    AUTO sums the series when Re(s) > β + 1 and r ≤ 2 and integrates
    otherwise, or when the series tail bound exceeds tail_tol. VERIFY runs
    every legal path and raises DisagreementError when any two differ by more
    than ten times their combined error estimates.
    """
    if isinstance(mode, str):
        mode = EvalMode.from_string(mode)
    qcfg = qcfg or QuadConfig.default()
    scfg = scfg or SeriesConfig.default(expectation_cfg=qcfg)
    s = complex(s)

    if mode is EvalMode.AUTO:
        use_series = (
            s.real > params.beta + AUTO_SERIES_MARGIN and params.r <= AUTO_SERIES_MAX_R
        )
        if use_series:
            try:
                return _SERIES[params.family](params, s, scfg)
            except TailToleranceError as e:
                logger.debug(f"auto mode left the series path: {e}")
                return evaluate(params, s, qcfg).with_warnings(AUTO_FALLBACK_NOTE)
        logger.debug("auto mode chose the integral path")
        mode = EvalMode.INTEGRAL

    if mode is EvalMode.SERIES:
        return _SERIES[params.family](params, s, scfg)
    if mode is EvalMode.INTEGRAL:
        return evaluate(params, s, qcfg)
    if mode is EvalMode.MELLIN:
        return eval_mellin(params, s, qcfg)
    return _verify(params, s, qcfg, scfg)
