"""
Spectrum Tests - 격자 스펙트럼, 병렬 평가, 분산 적분 테스트
"""

import math

import numpy as np
import pytest
import sys
from pathlib import Path

# 프로젝트 경로 추가
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from src.core.constants import EPSILON_0, SPECTRUM_HEADER, SPEED_OF_LIGHT, thz_to_angular
from src.core.exceptions import GridTooCoarse
from src.core.types import GridSpacing, SignalComponent
from src.numerics.quadrature import trapezoid
from src.signal import (
    SpectrumResult,
    compute_spectrum,
    evaluate_point,
    frequency_grid,
    integrate_spectrum,
    normalization_sqrt_c,
    s2_absorptive,
    s2_paraxial,
    variance,
)


class TestFrequencyGrid:
    """Ω 격자 생성 테스트"""

    def test_log_grid(self):
        """로그 간격, 끝점 포함"""
        grid = frequency_grid(0.1, 10.0, 3)
        np.testing.assert_allclose(grid, [thz_to_angular(f) for f in (0.1, 1.0, 10.0)], rtol=1e-12)

    def test_linear_grid(self):
        """선형 간격"""
        grid = frequency_grid(1.0, 3.0, 5, GridSpacing.LINEAR)
        np.testing.assert_allclose(np.diff(grid), thz_to_angular(0.5), rtol=1e-12)

    @pytest.mark.parametrize("args", [(0.0, 1.0, 10), (2.0, 1.0, 10), (0.1, 1.0, 1)])
    def test_invalid(self, args):
        """잘못된 범위나 점 수는 ValueError"""
        with pytest.raises(ValueError):
            frequency_grid(*args)


class TestSpectrumResult:
    """결과 값 객체 테스트"""

    def test_to_frame(self):
        """긴 형식 표 헤더와 행 수"""
        omegas = frequency_grid(1.0, 2.0, 4)
        result = SpectrumResult(
            omegas,
            {SignalComponent.PARAXIAL: np.ones(4), SignalComponent.TAYLOR: np.zeros(4)},
            {SignalComponent.PARAXIAL: np.zeros(4), SignalComponent.TAYLOR: np.zeros(4)},
        )
        frame = result.to_frame()
        assert list(frame.columns) == SPECTRUM_HEADER
        assert len(frame) == 8
        assert set(frame["component"]) == {"paraxial", "taylor"}
        assert frame["freq_thz"].iloc[0] == pytest.approx(1.0)

    def test_rejects_non_finite(self):
        """비유한 값 거부"""
        omegas = frequency_grid(1.0, 2.0, 3)
        with pytest.raises(ValueError):
            SpectrumResult(omegas, {SignalComponent.PARAXIAL: np.array([1.0, np.nan, 1.0])},
                           {SignalComponent.PARAXIAL: np.zeros(3)})

    def test_rejects_decreasing_grid(self):
        """감소하는 격자 거부"""
        with pytest.raises(ValueError):
            SpectrumResult(np.array([2.0, 1.0]), {}, {})


class TestEvaluatePoint:
    """점별 평가 테스트"""

    def test_delay_scan_not_pointwise(self, riek_config):
        """지연 스캔 성분은 점별 평가 불가"""
        with pytest.raises(ValueError):
            evaluate_point(riek_config, [SignalComponent.DELAY_SCAN], thz_to_angular(1.0))

    def test_absorptive_split_shared(self, absorbing_riek_config):
        """흡수 성분들과 횡방향은 같은 분해에서"""
        omega = thz_to_angular(3.0)
        values = evaluate_point(absorbing_riek_config, [
            SignalComponent.ABSORPTIVE,
            SignalComponent.ABSORPTIVE_FIRST,
            SignalComponent.ABSORPTIVE_SECOND,
            SignalComponent.LONGITUDINAL,
            SignalComponent.TRANSVERSE,
        ], omega)
        split = s2_absorptive(absorbing_riek_config, omega)
        assert values[SignalComponent.ABSORPTIVE].value == split.value
        assert values[SignalComponent.ABSORPTIVE_FIRST].value == split.first
        assert values[SignalComponent.ABSORPTIVE_SECOND].value == split.second
        assert values[SignalComponent.TRANSVERSE].value == pytest.approx(
            split.value - values[SignalComponent.LONGITUDINAL].value, rel=1e-12)

    def test_simple_component(self, riek_config):
        """단순 성분은 해당 함수 그대로"""
        omega = thz_to_angular(5.0)
        values = evaluate_point(riek_config, [SignalComponent.PARAXIAL], omega)
        assert values[SignalComponent.PARAXIAL].value == s2_paraxial(riek_config, omega).value


class TestComputeSpectrum:
    """병렬 스펙트럼 계산 테스트"""

    def test_thread_count_does_not_change_values(self, riek_config):
        """스레드 수와 무관하게 동일한 배열"""
        omegas = frequency_grid(0.5, 60.0, 12)
        components = [SignalComponent.PARAXIAL, SignalComponent.LASER_PARAXIAL]
        serial = compute_spectrum(riek_config, components, omegas, threads=1)
        parallel = compute_spectrum(riek_config, components, omegas, threads=4)
        for component in components:
            np.testing.assert_array_equal(serial.values[component], parallel.values[component])

    def test_grid_order_preserved(self, riek_config):
        """결과는 격자 순서"""
        omegas = frequency_grid(1.0, 50.0, 6)
        result = compute_spectrum(riek_config, ["paraxial"], omegas, threads=3)
        expected = [s2_paraxial(riek_config, float(o)).value for o in omegas]
        np.testing.assert_array_equal(result.values[SignalComponent.PARAXIAL], expected)

    def test_duplicate_components_collapsed(self, riek_config):
        """중복 성분은 한 번만"""
        result = compute_spectrum(riek_config, [SignalComponent.TAYLOR, SignalComponent.TAYLOR],
                                  frequency_grid(1.0, 2.0, 2))
        assert result.components == [SignalComponent.TAYLOR]


class TestVariance:
    """분산 적분 테스트"""

    def test_gaussian_bump(self):
        """∫ e^{−(Ω−Ω₀)²/2s²} dΩ = s√(2π)"""
        omegas = np.linspace(0.0, 20.0, 2001)
        values = np.exp(-(omegas - 10.0) ** 2 / (2.0 * 1.5 ** 2))
        assert integrate_spectrum(omegas, values) == pytest.approx(1.5 * math.sqrt(2.0 * math.pi), rel=1e-8)

    def test_grid_too_coarse(self):
        """절반 격자와 크게 다르면 GridTooCoarse"""
        omegas = np.arange(5, dtype=float)
        values = np.array([0.0, 0.0, 10.0, 0.0, 0.0])
        with pytest.raises(GridTooCoarse):
            integrate_spectrum(omegas, values)

    def test_zero_spectrum(self):
        """0 스펙트럼은 검사 없이 0"""
        assert integrate_spectrum(np.arange(4, dtype=float), np.zeros(4)) == 0.0

    def test_variance_is_trapezoid_of_spectrum(self, riek_config):
        """분산 = 같은 격자 스펙트럼의 사다리꼴 적분"""
        omegas = frequency_grid(10.0, 70.0, 61, GridSpacing.LINEAR)
        result = compute_spectrum(riek_config, [SignalComponent.PARAXIAL], omegas)
        expected = trapezoid(result.values[SignalComponent.PARAXIAL], omegas)
        assert variance(riek_config, SignalComponent.PARAXIAL, omegas, rel_tol=0.5) == pytest.approx(
            expected, rel=1e-12)

    def test_normalization(self, riek_config):
        """√C = 2|χ|Lω_pN/(n_c ε₀ c)"""
        expected = (2.0 * 1.17e-21 * riek_config.crystal_length * riek_config.omega_p * 1e8
                    / (riek_config.n_c * EPSILON_0 * SPEED_OF_LIGHT))
        assert normalization_sqrt_c(riek_config) == pytest.approx(expected, rel=1e-14)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
