"""
Pulse Tests - 프로브 펄스 스펙트럼과 범함수 테스트
"""

import math

import numpy as np
import pytest
import sys
from pathlib import Path

# 프로젝트 경로 추가
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from src.core.constants import EPSILON_0, FS, HBAR, SPEED_OF_LIGHT, TWO_PI, UM, thz_to_angular
from src.core.exceptions import FormatError
from src.core.types import DurationMapping
from src.pulse import (
    Gaussian,
    PulseSpectrum,
    Rectangular,
    TabulatedPulse,
    amplitude,
    detected_energy,
    load_tabulated_pulse,
    mean_detected_frequency,
    photon_number,
    photon_number_scale,
    product_support,
    spectral_autocorrelation,
    with_duration,
)


def _ones(omega):
    return np.ones_like(np.asarray(omega, dtype=float))


@pytest.fixture
def rectangular():
    """255 ± 37.5 THz 사각 펄스"""
    return PulseSpectrum(Rectangular(thz_to_angular(255.0), thz_to_angular(75.0)), 1e8, 3.0 * UM)


@pytest.fixture
def gaussian():
    """375 THz, 80 fs 가우시안 펄스"""
    return PulseSpectrum(Gaussian(thz_to_angular(375.0), 80.0 * FS), 1e8, 125.0 * UM)


class TestShapes:
    """스펙트럼 형태 테스트"""

    def test_rectangular_amplitude(self, rectangular):
        """구간 안 1, 밖 0"""
        shape = rectangular.shape
        assert amplitude(rectangular, shape.omega_c) == 1.0
        assert amplitude(rectangular, shape.upper * 1.001) == 0.0
        assert rectangular.support == (shape.lower, shape.upper)

    def test_rectangular_validation(self):
        """Δω ≥ 2ω_c 는 음의 주파수에 도달"""
        with pytest.raises(ValueError):
            Rectangular(1.0, 2.0)
        with pytest.raises(ValueError):
            Rectangular(1.0, 0.0)

    def test_gaussian_energy(self, gaussian):
        """∫E_p² dω = 1/2 (η ≡ 1)"""
        assert detected_energy(gaussian) == pytest.approx(0.5, rel=1e-8)

    def test_gaussian_sigma(self):
        """σ = √(2/π)/Δt"""
        shape = Gaussian(thz_to_angular(375.0), 80.0 * FS)
        assert shape.sigma == pytest.approx(math.sqrt(2.0 / math.pi) / (80.0 * FS))

    def test_tabulated_amplitude(self):
        """선형 보간, 범위 밖 0"""
        shape = TabulatedPulse(np.array([1.0, 2.0, 3.0]), np.array([0.0, 1.0, 0.0]))
        pulse = PulseSpectrum(shape, 1.0, 1.0)
        assert amplitude(pulse, 1.5) == pytest.approx(0.5)
        assert amplitude(pulse, 3.5) == 0.0
        assert shape.omega_c == pytest.approx(2.0)

    def test_pulse_validation(self, rectangular):
        """N, w 는 양수"""
        with pytest.raises(ValueError):
            PulseSpectrum(rectangular.shape, 0.0, 3.0 * UM)
        with pytest.raises(ValueError):
            PulseSpectrum(rectangular.shape, 1e8, 0.0)


class TestFunctionals:
    """펄스 범함수 테스트"""

    def test_rectangular_autocorrelation(self, rectangular):
        """f(Ω) = max(0, 1 − Ω/Δω)"""
        delta = rectangular.shape.delta_omega
        assert spectral_autocorrelation(rectangular, 0.0) == 1.0
        assert spectral_autocorrelation(rectangular, 0.3 * delta) == pytest.approx(0.7)
        assert spectral_autocorrelation(rectangular, 1.2 * delta) == 0.0

    def test_autocorrelation_is_even(self, gaussian):
        """f(−Ω) = f(Ω)"""
        omega = thz_to_angular(3.0)
        assert spectral_autocorrelation(gaussian, -omega) == spectral_autocorrelation(gaussian, omega)

    def test_rectangular_numeric_matches_closed_form(self, rectangular):
        """η 를 지정하면 적분 경로, 결과는 닫힌 형태와 동일"""
        numeric = PulseSpectrum(rectangular.shape, 1e8, 3.0 * UM, efficiency=_ones)
        delta = rectangular.shape.delta_omega
        for fraction in (0.1, 0.5, 0.9):
            assert spectral_autocorrelation(numeric, fraction * delta) == pytest.approx(1.0 - fraction, rel=1e-8)
        assert mean_detected_frequency(numeric) == pytest.approx(mean_detected_frequency(rectangular), rel=1e-8)

    def test_gaussian_numeric_matches_closed_form(self, gaussian):
        """가우시안 f(Ω) = exp(−Ω²/2σ²)"""
        numeric = PulseSpectrum(gaussian.shape, 1e8, 125.0 * UM, efficiency=_ones)
        sigma = gaussian.shape.sigma
        for omega in (0.2 * sigma, sigma, 2.5 * sigma):
            expected = math.exp(-omega ** 2 / (2.0 * sigma ** 2))
            assert spectral_autocorrelation(gaussian, omega) == pytest.approx(expected, rel=1e-14)
            assert spectral_autocorrelation(numeric, omega) == pytest.approx(expected, rel=1e-6)

    def test_mean_detected_frequency(self, rectangular):
        """사각 펄스 ω_p = Δω/ln(ω₊/ω₋)"""
        shape = rectangular.shape
        expected = shape.delta_omega / math.log(shape.upper / shape.lower)
        assert mean_detected_frequency(rectangular) == pytest.approx(expected, rel=1e-14)
        assert shape.lower < mean_detected_frequency(rectangular) < shape.omega_c

    def test_photon_number_scale(self, rectangular):
        """배율을 적용한 펄스의 광자수는 목표값"""
        n_c = 2.76
        scale = photon_number_scale(rectangular, n_c)
        assert photon_number(rectangular.rescaled(scale), n_c) == pytest.approx(1e8, rel=1e-12)

    def test_photon_number_formula(self, rectangular):
        """N = 4πε₀c·n·∫E²/(ħω) dω"""
        shape = rectangular.shape
        expected = 4.0 * math.pi * EPSILON_0 * SPEED_OF_LIGHT * 2.5 * math.log(shape.upper / shape.lower) / HBAR
        assert photon_number(rectangular, 2.5) == pytest.approx(expected, rel=1e-14)


class TestSupport:
    """지지 구간 테스트"""

    def test_product_support_rectangular(self, rectangular):
        """E(ω)E(ω+Ω) 구간 길이 Δω − Ω"""
        delta = rectangular.shape.delta_omega
        a, b = product_support(rectangular, 0.25 * delta, +1)
        assert b - a == pytest.approx(0.75 * delta)
        assert product_support(rectangular, 1.5 * delta, -1) is None

    def test_gaussian_support_positive(self, gaussian):
        """가우시안 지지 구간은 양의 주파수"""
        lo, hi = gaussian.support
        assert 0 < lo < gaussian.omega_c < hi


class TestDurationMapping:
    """펄스 길이 재매개화 테스트"""

    def test_reciprocal(self, rectangular):
        """Δω = 2π/Δt"""
        swept = with_duration(rectangular, 10.0 * FS)
        assert swept.shape.delta_omega == pytest.approx(TWO_PI / (10.0 * FS))
        assert swept.omega_c == rectangular.omega_c
        assert swept.photon_number == rectangular.photon_number

    def test_fwhm(self, rectangular):
        """Δω = 4 ln2/Δt"""
        swept = with_duration(rectangular, 10.0 * FS, DurationMapping.FWHM)
        assert swept.shape.delta_omega == pytest.approx(4.0 * math.log(2.0) / (10.0 * FS))

    def test_gaussian(self, gaussian):
        """가우시안은 Δt 를 그대로 교체"""
        assert with_duration(gaussian, 20.0 * FS).shape.delta_t == pytest.approx(20.0 * FS)

    def test_tabulated_rejected(self):
        """표 펄스는 재매개화 불가"""
        pulse = PulseSpectrum(TabulatedPulse(np.array([1.0, 2.0]), np.array([1.0, 1.0])), 1.0, 1.0)
        with pytest.raises(ValueError):
            with_duration(pulse, 10.0 * FS)


class TestTabulatedPulseFile:
    """펄스 표 파일 테스트"""

    def test_load(self, tmp_path):
        """freq_thz,amplitude 형식"""
        path = tmp_path / "pulse.csv"
        path.write_text("# probe spectrum\nfreq_thz,amplitude\n250.0,0.5\n255.0,1.0\n260.0,0.5\n")
        shape = load_tabulated_pulse(path)
        assert shape.omegas[0] == pytest.approx(thz_to_angular(250.0))
        assert shape.omega_c == pytest.approx(thz_to_angular(255.0))

    def test_bad_header(self, tmp_path):
        """헤더 불일치는 FormatError"""
        path = tmp_path / "pulse.csv"
        path.write_text("f,a\n250.0,0.5\n255.0,1.0\n")
        with pytest.raises(FormatError):
            load_tabulated_pulse(path)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
