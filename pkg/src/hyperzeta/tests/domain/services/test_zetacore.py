"""Test evaluation of the moment zeta functions across the complex plane."""

import cmath
import math
from typing import Callable

import mpmath
import pytest
from pytest_mock import MockerFixture

from hyperzeta.domain.entities import (
    EvalMethod,
    EvalMode,
    EvalResult,
    Family,
    PoleKind,
    QuadConfig,
    SeriesConfig,
    ZetaParams,
)
from hyperzeta.domain.exceptions import AtPoleError, DisagreementError, ParameterError
from hyperzeta.domain.services import zetacore
from hyperzeta.tests.constants import ETA2, LN2, SQRT_PI, ZETA2, ZETA3

ZETA_HALF = -1.4603545088095868


def _close(result: EvalResult, expected: complex, tol: float = 1e-9) -> bool:
    return abs(result.value - expected) <= tol


def _alternating_hurwitz(s: complex, b: float) -> complex:
    """Σ (−1)^k (k+b)^{−s}, continued through the Hurwitz zeta function."""
    return complex(2**-s * (mpmath.zeta(s, 0.5 * b) - mpmath.zeta(s, 0.5 * (b + 1))))


@pytest.mark.unit
@pytest.mark.domain
class TestEvalS:
    """Test the sinh-moment integral representation"""

    @pytest.mark.parametrize(
        "s, expected",
        [(2.0, ZETA2), (0.5, ZETA_HALF), (0.0, -0.5), (-1.0, -1.0 / 12.0), (-2.0, 0.0)],
    )
    def test_riemann_zeta(
        self, hurwitz_params: ZetaParams, quad_config: QuadConfig, s: float, expected: float
    ) -> None:
        # Act
        result = zetacore.eval_S(hurwitz_params, s, quad_config)

        # Assert
        assert _close(result, expected), f"S({s}) = {result.value}, expected {expected}"
        assert result.err_estimate < 1e-8

    def test_conjugate_symmetry(self, hurwitz_params: ZetaParams, quad_config: QuadConfig) -> None:
        # Act
        upper = zetacore.eval_S(hurwitz_params, 0.5 + 3.0j, quad_config)
        lower = zetacore.eval_S(hurwitz_params, 0.5 - 3.0j, quad_config)

        # Assert
        assert abs(upper.value - lower.value.conjugate()) < 1e-10

    def test_scaling_of_a_and_b(
        self, params_factory: Callable[..., ZetaParams], quad_config: QuadConfig
    ) -> None:
        """Test doubling a and b multiplies S by 2^-s"""

        # Arrange
        s = 2.5 + 0.5j
        scaled = params_factory(a=[2.0], b=2.0)

        # Act
        value = zetacore.eval_S(scaled, s, quad_config).value
        base = zetacore.eval_S(params_factory(), s, quad_config).value

        # Assert
        assert abs(value - 2.0**-s * base) < 1e-10

    def test_negative_c_goes_through_mellin(
        self, params_factory: Callable[..., ZetaParams], quad_config: QuadConfig
    ) -> None:
        # Arrange
        params = params_factory(b=0.25)

        # Act
        result = zetacore.eval_S(params, 2.0, quad_config)

        # Assert
        assert params.c < 0
        assert result.method is EvalMethod.MELLIN
        assert zetacore.NEGATIVE_C_NOTE in result.warnings
        assert _close(result, float(mpmath.zeta(2, 0.25)), 1e-8)

    def test_at_pole(self, hurwitz_params: ZetaParams, quad_config: QuadConfig) -> None:
        # Act
        with pytest.raises(AtPoleError) as exc_info:
            zetacore.eval_S(hurwitz_params, 1.0 + 1e-12, quad_config)

        # Assert
        assert exc_info.value.details["pole"] == 1.0
        assert exc_info.value.details["residue"] == pytest.approx(1.0, abs=1e-12)

    def test_wrong_family(self, eta_params: ZetaParams, quad_config: QuadConfig) -> None:
        with pytest.raises(ParameterError):
            zetacore.eval_S(eta_params, 2.0, quad_config)


@pytest.mark.unit
@pytest.mark.domain
class TestEvalCAndT:
    """Test the entire cosh- and tanh-moment functions"""

    @pytest.mark.parametrize(
        "s, expected", [(2.0, ETA2), (1.0, LN2), (0.0, 0.5), (-1.0, 0.25)]
    )
    def test_dirichlet_eta(
        self, eta_params: ZetaParams, quad_config: QuadConfig, s: float, expected: float
    ) -> None:
        assert _close(zetacore.eval_C(eta_params, s, quad_config), expected)

    def test_tanh_at_one(self, tanh_params: ZetaParams, quad_config: QuadConfig) -> None:
        """Test T(1) equals the log of the Wallis product"""

        assert _close(zetacore.eval_T(tanh_params, 1.0, quad_config), math.log(math.pi / 2))

    def test_tanh_at_zero(self, tanh_params: ZetaParams, quad_config: QuadConfig) -> None:
        # Act
        result = zetacore.eval_T(tanh_params, 0.0, quad_config)

        # Assert
        assert result.value == 0.5
        assert result.err_estimate == 0.0

    def test_negative_c_for_cosh(
        self, params_factory: Callable[..., ZetaParams], quad_config: QuadConfig
    ) -> None:
        # Arrange
        params = params_factory(family=Family.COSH, b=0.2)
        expected = complex(0.25 * (mpmath.zeta(2, 0.1) - mpmath.zeta(2, 0.6)))

        # Act
        result = zetacore.eval_C(params, 2.0, quad_config)

        # Assert
        assert result.method is EvalMethod.MELLIN
        assert _close(result, expected, 1e-8)

    @pytest.mark.parametrize(
        "family, alpha, s",
        [
            (Family.COSH, [1.0], 0.5 + 3.0j),
            (Family.TANH, [1.0], 0.5 + 3.0j),
            (Family.COSH, [1.0, 2.0], -1.0 + 2.0j),
        ],
    )
    def test_conjugate_symmetry(
        self,
        params_factory: Callable[..., ZetaParams],
        quad_config: QuadConfig,
        family: Family,
        alpha: list[float],
        s: complex,
    ) -> None:
        # Arrange
        params = params_factory(family=family, alpha=alpha, b=2.5)

        # Act
        upper = zetacore.evaluate(params, s, quad_config)
        lower = zetacore.evaluate(params, s.conjugate(), quad_config)

        # Assert
        allowed = upper.err_estimate + lower.err_estimate + 1e-12
        assert abs(upper.value - lower.value.conjugate()) <= allowed

    def test_evaluate_routes_by_family(
        self, tanh_params: ZetaParams, quad_config: QuadConfig
    ) -> None:
        # Act
        routed = zetacore.evaluate(tanh_params, 2.0, quad_config)
        direct = zetacore.eval_T(tanh_params, 2.0, quad_config)

        # Assert
        assert routed == direct

@pytest.mark.unit
@pytest.mark.domain
class TestFarLeftOfInvertedDensities:
    """Test evaluation left of Re(s) = -2 when the density is only known by inversion"""

    @pytest.mark.parametrize("s", [-2.501, -4.3, -3.7 + 1.0j])
    def test_half_order_sinh(
        self, params_factory: Callable[..., ZetaParams], quad_config: QuadConfig, s: complex
    ) -> None:
        # Arrange
        params = params_factory(alpha=[0.5])

        # Act
        result = zetacore.eval_S(params, s, quad_config)

        # Assert
        assert result.method is EvalMethod.MELLIN
        assert zetacore.INVERTED_GROWTH_NOTE in result.warnings
        assert cmath.isfinite(result.value)
        assert result.value == zetacore.eval_mellin(params, s, quad_config).value

    @pytest.mark.parametrize("s", [-4.5, -3.0 + 1.0j, -6.2])
    def test_double_cosh_matches_alternating_hurwitz(
        self, params_factory: Callable[..., ZetaParams], quad_config: QuadConfig, s: complex
    ) -> None:
        """Test Σ (−1)^k (k+1)(k+b)^{−s} = A(s−1) + (1−b)A(s), A the alternating sum"""

        # Arrange
        b = 1.5
        params = params_factory(family=Family.COSH, alpha=[1.0, 1.0], b=b)
        expected = _alternating_hurwitz(s - 1, b) + (1 - b) * _alternating_hurwitz(s, b)

        # Act
        result = zetacore.eval_C(params, s, quad_config)

        # Assert
        assert result.method is EvalMethod.MELLIN
        assert abs(result.value - expected) <= 1e-8 * max(1.0, abs(expected))

    def test_double_cosh_at_the_boundary_integrates(
        self, params_factory: Callable[..., ZetaParams], quad_config: QuadConfig
    ) -> None:
        # Arrange
        b = 1.5
        params = params_factory(family=Family.COSH, alpha=[1.0, 1.0], b=b)
        expected = _alternating_hurwitz(-3.0, b) + (1 - b) * _alternating_hurwitz(-2.0, b)

        # Act
        result = zetacore.eval_C(params, -2.0, quad_config)

        # Assert
        assert result.method is EvalMethod.INTEGRAL
        assert abs(result.value - expected) <= max(10.0 * result.err_estimate, 1e-6)

    def test_tanh_second_order(
        self, params_factory: Callable[..., ZetaParams], quad_config: QuadConfig
    ) -> None:
        # Arrange
        params = params_factory(family=Family.TANH, alpha=[2.0])

        # Act
        result = zetacore.eval_T(params, -3.0, quad_config)
        loose = zetacore.eval_T(params, -3.0, quad_config.replace(abs_tol=1e-8, rel_tol=1e-8))

        # Assert
        assert result.method is EvalMethod.MELLIN
        assert zetacore.INVERTED_GROWTH_NOTE in result.warnings
        assert abs(result.value - loose.value) <= 1e-6 * max(1.0, abs(result.value))

    def test_closed_density_keeps_the_integral(
        self, eta_params: ZetaParams, quad_config: QuadConfig
    ) -> None:
        """Test η(−3) = −1/8 through the closed sech density"""

        # Act
        result = zetacore.eval_C(eta_params, -3.0, quad_config)

        # Assert
        assert result.method is EvalMethod.INTEGRAL
        assert _close(result, -0.125, 1e-8)

    def test_residue_at_far_left_pole(
        self, params_factory: Callable[..., ZetaParams], quad_config: QuadConfig
    ) -> None:
        # Arrange
        params = params_factory(alpha=[0.5])
        reported = zetacore.poles_S(params, n_max=3, cfg=quad_config).entries[-1]

        # Act
        residue = zetacore.residue_check(params, -2.5, cfg=quad_config)

        # Assert
        assert reported.location == -2.5
        assert residue == pytest.approx(reported.residue, rel=1e-3, abs=1e-6)


@pytest.mark.unit
@pytest.mark.domain
class TestWrappers:
    """Test the classical special cases"""

    def test_hurwitz(self, quad_config: QuadConfig) -> None:
        assert _close(zetacore.hurwitz(2.0, 2.0, quad_config), ZETA2 - 1.0)

    def test_barnes_double(self, quad_config: QuadConfig) -> None:
        # Arrange
        expected = float(mpmath.zeta(3, 3) - 2 * mpmath.zeta(4, 3))

        # Act & Assert
        assert _close(zetacore.barnes(4.0, [1.0, 1.0], 3.0, quad_config), expected)

    def test_zeta2_is_shifted_zeta(self, quad_config: QuadConfig) -> None:
        assert _close(zetacore.zeta2(4.0, 1.0, quad_config), ZETA3)

    def test_alternating(self, quad_config: QuadConfig) -> None:
        # Assert
        assert _close(zetacore.eta_shift(1.0, 1.0, quad_config), LN2)
        assert _close(zetacore.eta2_shift(3.0, 1.0, quad_config), ETA2)
        assert _close(zetacore.barnes_alternating(1.0, [1.0], 1.0, quad_config), LN2)

    def test_tanh_hurwitz(self, quad_config: QuadConfig) -> None:
        assert _close(zetacore.tanh_hurwitz(2.0, 1.0, quad_config), 2.0 * LN2 - 1.0)

    def test_tanh_barnes_matches_tanh_hurwitz(self, quad_config: QuadConfig) -> None:
        # Act
        single = zetacore.tanh_barnes(1.5 + 1.0j, [1.0], 1.0, quad_config)
        wrapped = zetacore.tanh_hurwitz(1.5 + 1.0j, 1.0, quad_config)

        # Assert
        assert single == wrapped

    def test_hurwitz_rejects_half_shift(self, quad_config: QuadConfig) -> None:
        with pytest.raises(ParameterError):
            zetacore.hurwitz(2.0, 0.5, quad_config)


@pytest.mark.unit
@pytest.mark.domain
class TestMellinContinuation:
    """Test the Mellin continuation against the integral representations"""

    @pytest.mark.parametrize(
        "s, expected", [(2.0, ZETA2), (0.0, -0.5), (-1.0, -1.0 / 12.0), (-3.0, 1.0 / 120.0)]
    )
    def test_riemann_zeta(
        self, hurwitz_params: ZetaParams, quad_config: QuadConfig, s: float, expected: float
    ) -> None:
        # Act
        result = zetacore.eval_mellin(hurwitz_params, s, quad_config)

        # Assert
        assert result.method is EvalMethod.MELLIN
        assert _close(result, expected)

    def test_hurwitz_at_zero(
        self, params_factory: Callable[..., ZetaParams], quad_config: QuadConfig
    ) -> None:
        """Test ζ(0; b) = 1/2 − b"""

        assert _close(zetacore.eval_mellin(params_factory(b=0.3), 0.0, quad_config), 0.2)

    @pytest.mark.parametrize(
        "family, alpha, s",
        [
            (Family.SINH, [0.5, 1.0], -0.3 + 2.0j),
            (Family.COSH, [1.0, 2.0], -1.5 + 2.0j),
            (Family.TANH, [1.0, 2.0], -1.5 + 2.0j),
        ],
    )
    def test_agrees_with_integral(
        self,
        params_factory: Callable[..., ZetaParams],
        quad_config: QuadConfig,
        family: Family,
        alpha: list[float],
        s: complex,
    ) -> None:
        # Arrange
        params = params_factory(family=family, alpha=alpha, a=[1.0, 0.5], b=1.5)

        # Act
        mellin = zetacore.eval_mellin(params, s, quad_config)
        integral = zetacore.evaluate(params, s, quad_config)

        # Assert
        assert integral.method is EvalMethod.INTEGRAL
        allowed = 10.0 * (mellin.err_estimate + integral.err_estimate) + 1e-12
        assert abs(mellin.value - integral.value) <= allowed


@pytest.mark.unit
@pytest.mark.domain
class TestPoles:
    """Test pole reports and residues of the sinh-moment function"""

    def test_hurwitz(self, hurwitz_params: ZetaParams, quad_config: QuadConfig) -> None:
        # Act
        report = zetacore.poles_S(hurwitz_params, cfg=quad_config)

        # Assert
        assert len(report) == 1
        entry = report.entries[0]
        assert entry.location == 1.0
        assert entry.residue == pytest.approx(1.0, abs=1e-12)
        assert entry.kind is PoleKind.INTEGER_CASE

    def test_barnes_double(
        self, params_factory: Callable[..., ZetaParams], quad_config: QuadConfig
    ) -> None:
        # Act
        report = zetacore.poles_S(params_factory(alpha=[1.0, 1.0], b=3.0), cfg=quad_config)

        # Assert
        assert [entry.location for entry in report] == [2.0, 1.0]
        assert [entry.residue for entry in report] == pytest.approx([1.0, -2.0], abs=1e-9)

    def test_half_order(
        self, params_factory: Callable[..., ZetaParams], quad_config: QuadConfig
    ) -> None:
        # Act
        report = zetacore.poles_S(params_factory(alpha=[0.5]), n_max=3, cfg=quad_config)

        # Assert
        assert [entry.location for entry in report] == [0.5, -0.5, -1.5, -2.5]
        assert report.entries[0].residue == pytest.approx(1.0 / SQRT_PI, rel=1e-12)
        assert report.entries[0].kind is PoleKind.NONINTEGER_CASE_I
        assert {entry.kind for entry in report.entries[1:]} == {PoleKind.NONINTEGER_CASE_II}

    def test_half_order_pole_and_trivial_zero(
        self, params_factory: Callable[..., ZetaParams], quad_config: QuadConfig
    ) -> None:
        # Arrange
        params = params_factory(alpha=[0.5])

        # Act
        with pytest.raises(AtPoleError) as exc_info:
            zetacore.eval_S(params, 0.5, quad_config)
        zero = zetacore.eval_S(params, -1.0, quad_config)

        # Assert
        assert exc_info.value.residue == pytest.approx(1.0 / SQRT_PI, rel=1e-12)
        assert zero.value == 0

    def test_only_sinh(self, eta_params: ZetaParams) -> None:
        with pytest.raises(ParameterError):
            zetacore.poles_S(eta_params)

    def test_negative_n_max(self, hurwitz_params: ZetaParams) -> None:
        with pytest.raises(ParameterError):
            zetacore.poles_S(hurwitz_params, n_max=-1)

    @pytest.mark.slow
    def test_numeric_residue(
        self, params_factory: Callable[..., ZetaParams], quad_config: QuadConfig
    ) -> None:
        # Arrange
        params = params_factory(alpha=[1.0, 1.0], b=3.0)

        # Act
        residue = zetacore.residue_check(params, 1.0, cfg=quad_config)

        # Assert
        assert residue == pytest.approx(-2.0, abs=1e-6)

    def test_residue_step_range(self, hurwitz_params: ZetaParams) -> None:
        with pytest.raises(ParameterError):
            zetacore.residue_check(hurwitz_params, 1.0, h=0.5)


@pytest.mark.unit
@pytest.mark.domain
class TestDispatch:
    """Test path selection and cross-checking"""

    def test_auto_sums_far_right(
        self, hurwitz_params: ZetaParams, quad_config: QuadConfig
    ) -> None:
        # Act
        result = zetacore.dispatch(hurwitz_params, 3.0, EvalMode.AUTO, quad_config)

        # Assert
        assert result.method is EvalMethod.SERIES
        assert abs(result.value - ZETA3) <= result.err_estimate

    def test_auto_integrates_near_poles(
        self, hurwitz_params: ZetaParams, quad_config: QuadConfig
    ) -> None:
        # Act
        result = zetacore.dispatch(hurwitz_params, 1.5, "auto", quad_config)

        # Assert
        assert result.method is EvalMethod.INTEGRAL

    def test_auto_integrates_when_tail_is_loose(
        self,
        hurwitz_params: ZetaParams,
        quad_config: QuadConfig,
        series_config_factory: Callable[..., SeriesConfig],
    ) -> None:
        # Arrange
        scfg = series_config_factory(dim_cutoff=10, tail_tol=1e-6)

        # Act
        result = zetacore.dispatch(hurwitz_params, 2.5, EvalMode.AUTO, quad_config, scfg)

        # Assert
        assert result.method is EvalMethod.INTEGRAL
        assert zetacore.AUTO_FALLBACK_NOTE in result.warnings
        assert _close(result, complex(mpmath.zeta(2.5)))

    def test_explicit_modes(self, eta_params: ZetaParams, quad_config: QuadConfig) -> None:
        # Act
        integral = zetacore.dispatch(eta_params, 2.0, "integral", quad_config)
        mellin = zetacore.dispatch(eta_params, 2.0, "mellin", quad_config)

        # Assert
        assert integral.method is EvalMethod.INTEGRAL
        assert mellin.method is EvalMethod.MELLIN
        assert _close(integral, ETA2)
        assert _close(mellin, ETA2)

    def test_verify_reports_discrepancy(
        self, hurwitz_params: ZetaParams, quad_config: QuadConfig, series_config: SeriesConfig
    ) -> None:
        # Act
        result = zetacore.dispatch(hurwitz_params, 3.0, "verify", quad_config, series_config)

        # Assert
        assert result.method is EvalMethod.INTEGRAL
        assert any(note.startswith("verify:") for note in result.warnings)
        assert "series" in result.warnings[0]

    def test_verify_skips_series_outside_region(
        self, hurwitz_params: ZetaParams, quad_config: QuadConfig
    ) -> None:
        # Act
        result = zetacore.dispatch(hurwitz_params, 0.5, "verify", quad_config)

        # Assert
        assert any("outside the convergence region" in note for note in result.warnings)

    def test_verify_detects_disagreement(
        self, hurwitz_params: ZetaParams, quad_config: QuadConfig, mocker: MockerFixture
    ) -> None:
        # Arrange
        mocker.patch.object(
            zetacore,
            "eval_mellin",
            return_value=EvalResult(value=0j, err_estimate=1e-12, method=EvalMethod.MELLIN),
        )

        # Act
        with pytest.raises(DisagreementError) as exc_info:
            zetacore.dispatch(hurwitz_params, 0.5, "verify", quad_config)

        # Assert
        assert exc_info.value.details["paths"] == ["integral", "mellin"]
        assert exc_info.value.details["discrepancy"] == pytest.approx(abs(ZETA_HALF), rel=1e-8)

    def test_unknown_mode(self, hurwitz_params: ZetaParams) -> None:
        with pytest.raises(ParameterError):
            zetacore.dispatch(hurwitz_params, 2.0, "fastest")

    def test_series_legal(self, hurwitz_params: ZetaParams) -> None:
        # Assert
        assert zetacore.series_legal(hurwitz_params, 1.6)
        assert not zetacore.series_legal(hurwitz_params, 1.5)
