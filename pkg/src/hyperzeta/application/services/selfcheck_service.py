"""
Self-check suite: classical values, identities, region agreement, residues,
trivial zeros, the density suite and the entirety smoke test, each run as a
named check against fixed thresholds. Tolerance overrides only tighten the
quadrature; the thresholds below never move.
"""

import cmath
import logging
import math
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable

import numpy as np
from injector import inject

from config import settings
from hyperzeta.application.dtos import CheckResultDTO, SelfCheckReportDTO
from hyperzeta.domain.entities import (
    EvalResult,
    Family,
    MixtureSpec,
    QuadConfig,
    SeriesConfig,
    ZetaParams,
)
from hyperzeta.domain.exceptions import TailToleranceError
from hyperzeta.domain.services import hyperdist, oracle, zetacore
from hyperzeta.domain.services.quadrature import integrate_line

__all__ = (
    "NamedCheck",
    "CheckOutcome",
    "ExtraCheckProvider",
    "NoExtraChecks",
    "SelfCheckService",
)

logger = logging.getLogger(__name__)

CheckOutcome = tuple[bool, str]

VALUE_TOL = 1e-6
ZERO_TOL = 1e-8
DENSITY_TOL = 1e-8
MC_VARIANCE_REL = 0.05
EVAL_SECONDS = 1.0
AGREEMENT_FACTOR = 10.0
RATIO_LIMIT = 10.0


@dataclass(frozen=True)
class NamedCheck:
    name: str
    run: Callable[[QuadConfig, bool], CheckOutcome]
    fast: bool = True


class ExtraCheckProvider(ABC):
    """Checks contributed by outer layers, e.g. golden output of the command line."""

    @abstractmethod
    def checks(self) -> list[NamedCheck]:
        """Return the additional checks to append to the suite."""


class NoExtraChecks(ExtraCheckProvider):
    def checks(self) -> list[NamedCheck]:
        return []


def _gap(result: EvalResult, expected: complex) -> float:
    return abs(result.value - expected)


def _summary(failures: list[str], passed_note: str) -> CheckOutcome:
    if failures:
        return False, "; ".join(failures)
    return True, passed_note


class SelfCheckService:
    @inject
    def __init__(self, extra: ExtraCheckProvider) -> None:
        self.extra = extra

    def checks(self) -> list[NamedCheck]:
        return [
            NamedCheck("classical-values", self.check_classical_values),
            NamedCheck("eta-identities", self.check_eta_identities),
            NamedCheck("split-identity", self.check_split_identity),
            NamedCheck("series-integral-agreement", self.check_series_agreement),
            NamedCheck("pole-residues", self.check_pole_residues),
            NamedCheck("trivial-zeros", self.check_trivial_zeros),
            NamedCheck("density-suite", self.check_density_suite),
            NamedCheck("entirety-smoke", self.check_entirety),
            *self.extra.checks(),
        ]

    def run(
        self, quad_config: QuadConfig, fast: bool = False, only: list[str] | None = None
    ) -> SelfCheckReportDTO:
        report = SelfCheckReportDTO()
        checks = self.checks()
        known = {check.name for check in checks}
        for name in only or []:
            if name not in known:
                report.checks.append(CheckResultDTO(name, False, "unknown check", 0.0))
        for check in checks:
            if only and check.name not in only:
                continue
            if fast and not check.fast:
                continue
            started = time.perf_counter()
            try:
                passed, detail = check.run(quad_config, fast)
            except Exception as e:
                logger.warning(f"self-check {check.name} raised: {e}")
                passed, detail = False, f"{type(e).__name__}: {e}"
            elapsed = time.perf_counter() - started
            report.checks.append(CheckResultDTO(check.name, passed, detail, elapsed))
        return report

    # -------------------------------------------------------------- checks

    def check_classical_values(self, cfg: QuadConfig, fast: bool) -> CheckOutcome:
        cases = [
            ((2.0, 1.0), math.pi**2 / 6),
            ((0.0, 1.0), -0.5),
            ((-1.0, 1.0), -1.0 / 12),
            ((0.0, 0.3), 0.2),
        ]
        failures = []
        for (s, b), expected in cases:
            started = time.perf_counter()
            gap = _gap(zetacore.hurwitz(s, b, cfg), expected)
            elapsed = time.perf_counter() - started
            if gap > VALUE_TOL:
                failures.append(f"zeta({s}; {b}) off by {gap:.3g}")
            if elapsed > EVAL_SECONDS:
                failures.append(f"zeta({s}; {b}) took {elapsed:.2f}s")
        return _summary(failures, f"{len(cases)} Hurwitz values within {VALUE_TOL:g}")

    def check_eta_identities(self, cfg: QuadConfig, fast: bool) -> CheckOutcome:
        points = [-1, 0, 2] if fast else [-2, -1, 0, 1, 2, 3, 2 + 3j]
        failures = []
        for s in points:
            gap = _gap(zetacore.eta_shift(s, 1.0, cfg), oracle.eta_reference(s).value)
            if gap > VALUE_TOL:
                failures.append(f"eta({s}) off by {gap:.3g}")
        return _summary(failures, f"{len(points)} eta values within {VALUE_TOL:g}")

    def check_split_identity(self, cfg: QuadConfig, fast: bool) -> CheckOutcome:
        points = [0.5, 1 + 2j] if fast else [-1.5, 0.5, 2, 1 + 2j]
        failures = []
        for b in (1.0, 2.5):
            for s in points:
                expected = oracle.alternating_hurwitz(s, b).value
                gap = _gap(zetacore.eta_shift(s, b, cfg), expected)
                if gap > VALUE_TOL:
                    failures.append(f"split at s={s}, b={b} off by {gap:.3g}")
        return _summary(failures, f"{2 * len(points)} split identities within {VALUE_TOL:g}")

    @staticmethod
    def agreement_parameters(count: int, seed: int) -> list[ZetaParams]:
        """Random parameter sets with r ≤ 2, a ∈ [0.5, 2], b ∈ [0.6, 3] and |c| ≥ 0.1."""
        rng = np.random.default_rng(seed)
        families = (Family.SINH, Family.COSH, Family.TANH)
        sets: list[ZetaParams] = []
        while len(sets) < count:
            family = families[len(sets) % len(families)]
            r = int(rng.integers(1, 3))
            choices = (1.0, 2.0, 0.5) if family is Family.SINH else (1.0, 2.0)
            alpha = [float(rng.choice(choices)) for _ in range(r)]
            a = [float(x) for x in rng.uniform(0.5, 2.0, r)]
            b = float(rng.uniform(0.6, 3.0))
            if abs(b - 0.5 * sum(x * y for x, y in zip(a, alpha))) < 0.1:
                continue
            sets.append(ZetaParams(family, alpha, a, b))
        return sets

    def check_series_agreement(self, cfg: QuadConfig, fast: bool) -> CheckOutcome:
        series_config = SeriesConfig.default(expectation_cfg=cfg)
        failures, compared = [], 0
        for params in self.agreement_parameters(4 if fast else 20, settings.SELFCHECK_SEED):
            for t in (0.0, 1.0):
                s = complex(params.beta + 2.5, t)
                try:
                    summed = zetacore.dispatch(params, s, "series", cfg, series_config)
                except TailToleranceError as e:
                    failures.append(
                        f"{params.to_dict()} at s={s}: series skipped, "
                        f"tail bound {e.tail_bound:.3g}"
                    )
                    continue
                integrated = zetacore.evaluate(params, s, cfg)
                gap = abs(summed.value - integrated.value)
                allowed = AGREEMENT_FACTOR * (
                    summed.err_estimate + integrated.err_estimate
                ) + 1e-14 * abs(integrated.value)
                compared += 1
                if gap > allowed:
                    failures.append(f"{params.to_dict()} at s={s}: gap {gap:.3g} > {allowed:.3g}")
        return _summary(failures, f"{compared} comparisons agree")

    def check_pole_residues(self, cfg: QuadConfig, fast: bool) -> CheckOutcome:
        cases = [
            (ZetaParams(Family.SINH, [1.0], [1.0], 1.0), {1.0: 1.0}),
            (ZetaParams(Family.SINH, [1.0, 1.0], [1.0, 1.0], 3.0), {2.0: 1.0, 1.0: -2.0}),
            (ZetaParams(Family.SINH, [0.5], [1.0], 1.0), {0.5: 1.0 / math.sqrt(math.pi)}),
        ]
        failures = []
        for params, expected in cases:
            report = zetacore.poles_S(params, n_max=1, cfg=cfg)
            for entry in report:
                tol = max(1e-6, 1e-3 * abs(entry.residue))
                wanted = expected.get(entry.location)
                if wanted is not None and abs(entry.residue - wanted) > tol:
                    failures.append(f"residue at {entry.location} is {entry.residue:.10g}")
                numeric = zetacore.residue_check(params, entry.location, cfg=cfg)
                if abs(numeric - entry.residue) > tol:
                    failures.append(
                        f"numeric residue at {entry.location} is {numeric:.10g}, "
                        f"reported {entry.residue:.10g}"
                    )
        return _summary(failures, "reported residues match their numeric limits")

    def check_trivial_zeros(self, cfg: QuadConfig, fast: bool) -> CheckOutcome:
        params = ZetaParams(Family.SINH, [0.5], [1.0], 1.0)
        failures = []
        for s in (0.0, -1.0, -2.0):
            size = abs(zetacore.eval_S(params, s, cfg).value)
            if size > ZERO_TOL:
                failures.append(f"|S({s})| = {size:.3g}")
        return _summary(failures, f"zeros at 0, -1, -2 within {ZERO_TOL:g}")

    def check_density_suite(self, cfg: QuadConfig, fast: bool) -> CheckOutcome:
        failures = []
        xs = np.linspace(-5.0, 5.0, 21 if fast else 81)

        specs = {
            f"{family.value}{t}": MixtureSpec.single(family, 1.0, t)
            for family in Family
            for t in (1, 2)
        }
        for name, spec in specs.items():
            total = integrate_line(
                lambda y, spec=spec: np.atleast_1d(hyperdist.mixture_density(spec, y, cfg)),
                cfg,
                [0.0],
            ).value.real
            if abs(total - 1.0) > DENSITY_TOL:
                failures.append(f"{name} integrates to {total:.12g}")

            # tanh1 has no inversion path; its closed form is checked through the normalization
            if name == "tanh1":
                continue
            inverted = hyperdist.density_mixture(spec, xs, cfg)
            closed = hyperdist.density_scaled_closed(spec.family, int(spec.orders[0]), xs, cfg)
            worst = float(np.max(np.abs(inverted - closed)))
            if worst > DENSITY_TOL:
                failures.append(f"{name} inversion off by {worst:.3g}")

        for family, variance in ((Family.SINH, 1 / 12), (Family.COSH, 1 / 4), (Family.TANH, 1 / 6)):
            computed = hyperdist.moment_mixture(MixtureSpec.single(family, 1.0, 1.0), 2, cfg)
            if abs(computed - variance) > DENSITY_TOL:
                failures.append(f"{family.value} variance {computed:.12g}")

        count = settings.MC_COUNT // 10 if fast else settings.MC_COUNT
        for family, variance in ((Family.SINH, 1 / 12), (Family.COSH, 1 / 4)):
            spec = MixtureSpec.single(family, 1.0, 1.0)
            draws = hyperdist.sample(spec, count, settings.SELFCHECK_SEED)
            sample_variance = float(np.var(draws))
            if abs(sample_variance / variance - 1.0) > MC_VARIANCE_REL:
                failures.append(f"{family.value} sample variance {sample_variance:.4g}")
            distance = oracle.ks_distance(
                draws, lambda x, family=family: hyperdist.cdf_closed(family, x)
            )
            if distance > 2.0 / math.sqrt(count):
                failures.append(f"{family.value} Kolmogorov-Smirnov distance {distance:.3g}")

        return _summary(failures, "normalization, inversion, variances and sampler agree")

    def check_entirety(self, cfg: QuadConfig, fast: bool) -> CheckOutcome:
        re_axis = np.arange(-5.0, 5.0 + 1e-9, 2.5 if fast else 0.5)
        im_axis = np.arange(-5.0, 5.0 + 1e-9, 5.0 if fast else 1.0)
        loose = cfg.replace(abs_tol=max(cfg.abs_tol, 1e-8), rel_tol=max(cfg.rel_tol, 1e-8))
        tight = cfg.tightened(abs_tol=1e-11, rel_tol=1e-11)
        failures = []

        cases = [
            ZetaParams(Family.COSH, [1.0], [1.0], 1.0),
            ZetaParams(Family.TANH, [1.0], [1.0], 1.0),
        ]
        if not fast:
            # inverted densities; left of Re(s) = -2 these go through the Mellin continuation
            cases += [
                ZetaParams(Family.COSH, [1.0, 1.0], [1.0, 1.0], 1.5),
                ZetaParams(Family.TANH, [2.0], [1.0], 1.0),
            ]
        for params in cases:
            family = params.family
            for im in im_axis:
                row = []
                for re in re_axis:
                    s = complex(re, im)
                    first = zetacore.evaluate(params, s, loose).value
                    second = zetacore.evaluate(params, s, tight).value
                    if not (cmath.isfinite(first) and cmath.isfinite(second)):
                        failures.append(f"{family.value} not finite at {s}")
                    elif abs(first - second) > VALUE_TOL * max(1.0, abs(second)):
                        failures.append(f"{family.value} configs differ at {s}")
                    row.append(second)

                for left, centre, right in zip(row, row[1:], row[2:]):
                    neighbours = max(abs(left), abs(right), 1e-12)
                    if abs(left - 2 * centre + right) / neighbours > RATIO_LIMIT:
                        failures.append(f"{family.value} spikes along Im(s)={im:g}")
                        break

        points = len(re_axis) * len(im_axis)
        return _summary(
            failures[:5], f"{len(cases) * points} points finite, smooth and config-stable"
        )
