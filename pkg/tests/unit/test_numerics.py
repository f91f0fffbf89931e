"""
Numerics Tests - 적분 엔진과 특수 함수 테스트
"""

import math

import numpy as np
import pytest
import sys
from pathlib import Path
from scipy import special

# 프로젝트 경로 추가
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from src.core.exceptions import DomainError, NonConvergence, QuadratureFailure
from src.core.types import QuadratureSpec
from src.numerics.quadrature import (
    Disc,
    Rectangle,
    gauss_legendre,
    integrate_1d,
    integrate_2d_nested,
    integrate_vector,
    trapezoid,
    trapezoid_weights,
)
from src.numerics.special import scaled_incomplete_gamma0, sinc, upper_incomplete_gamma0


class TestSinc:
    """sinc 함수 테스트"""

    def test_zero(self):
        """sinc(0) = 1"""
        assert sinc(0.0) == 1.0

    def test_small_argument_series(self):
        """작은 인자에서 급수와 직접 계산이 일치"""
        x = 5e-5
        assert sinc(x) == pytest.approx(1.0 - x * x / 6.0, rel=1e-15)

    def test_large_argument(self):
        """일반 인자"""
        assert sinc(math.pi / 2) == pytest.approx(2.0 / math.pi, rel=1e-14)
        assert abs(sinc(math.pi)) < 1e-15

    def test_array_input(self):
        """배열 입력은 배열 반환, 짝함수"""
        x = np.array([-2.0, -1e-6, 0.0, 1e-6, 2.0])
        y = sinc(x)
        assert isinstance(y, np.ndarray)
        np.testing.assert_allclose(y, y[::-1], rtol=0, atol=0)
        assert y[2] == 1.0


class TestIncompleteGamma:
    """상부 불완전 감마 함수 Γ(0, z) 테스트"""

    @pytest.mark.parametrize("z", [1e-6, 0.01, 0.3, 0.999, 1.0, 1.001, 2.0, 7.5, 30.0])
    def test_matches_exponential_integral(self, z):
        """급수/연분수 양쪽에서 E1 과 일치"""
        assert upper_incomplete_gamma0(z) == pytest.approx(float(special.exp1(z)), rel=1e-10)

    def test_continuous_at_crossover(self):
        """z = 1 전환점에서 연속"""
        below = upper_incomplete_gamma0(1.0 - 1e-12)
        above = upper_incomplete_gamma0(1.0 + 1e-12)
        assert above == pytest.approx(below, rel=1e-10)

    @pytest.mark.parametrize("z", [0.5, 3.0, 50.0, 800.0])
    def test_scaled_form(self, z):
        """e^z Γ(0, z) 는 큰 z 에서도 유한 (≈ 1/z)"""
        expected = float(special.exp1(z)) * math.exp(z) if z < 700 else 1.0 / z * (1.0 - 1.0 / z + 2.0 / z ** 2)
        assert scaled_incomplete_gamma0(z) == pytest.approx(expected, rel=1e-7)

    @pytest.mark.parametrize("z", [0.0, -1.0])
    def test_domain_error(self, z):
        """z ≤ 0 은 정의역 오류"""
        with pytest.raises(DomainError):
            upper_incomplete_gamma0(z)
        with pytest.raises(DomainError):
            scaled_incomplete_gamma0(z)


class TestIntegrate1D:
    """1차원 적응 적분 테스트"""

    def test_real_integrand(self):
        """∫₀^π sin = 2"""
        result = integrate_1d(math.sin, 0.0, math.pi, real=True)
        assert result.real == pytest.approx(2.0, rel=1e-10)
        assert result.error < 1e-8

    def test_complex_integrand(self):
        """∫₀^π e^{ix} dx = 2i"""
        result = integrate_1d(lambda x: complex(math.cos(x), math.sin(x)), 0.0, math.pi)
        assert result.value.real == pytest.approx(0.0, abs=1e-12)
        assert result.value.imag == pytest.approx(2.0, rel=1e-10)

    def test_semi_infinite_with_split_point(self):
        """∫₀^∞ e^{-x} = 1 (분할점에서 유한/무한 구간 분리)"""
        result = integrate_1d(lambda x: math.exp(-x), 0.0, math.inf, points=[2.0], real=True)
        assert result.real == pytest.approx(1.0, rel=1e-8)

    def test_kink_with_breakpoint(self):
        """꺾임점을 분할점으로 주면 정확"""
        result = integrate_1d(lambda x: abs(x - 0.3), 0.0, 1.0, points=[0.3], real=True)
        assert result.real == pytest.approx(0.5 * 0.3 ** 2 + 0.5 * 0.7 ** 2, rel=1e-12)

    def test_empty_interval(self):
        """a = b 이면 0"""
        result = integrate_1d(math.exp, 1.0, 1.0)
        assert result.value == 0.0
        assert result.error == 0.0

    def test_non_convergence(self):
        """분할 한도 안에서 허용 오차 미달이면 NonConvergence"""
        spec = QuadratureSpec(rel_tol=1e-13, max_subdivisions=1)
        with pytest.raises(NonConvergence) as exc_info:
            integrate_1d(lambda x: math.sin(100.0 * x), 0.0, 50.0, spec, real=True)
        assert math.isfinite(exc_info.value.error)

    def test_non_finite_result(self):
        """비유한 피적분 함수는 QuadratureFailure"""
        with pytest.raises(QuadratureFailure):
            integrate_1d(lambda x: float("nan"), 0.0, 1.0, real=True)


class TestIntegrate2D:
    """중첩 2차원 적분 테스트"""

    def test_rectangle(self):
        """∫∫ xy over [0,1]×[0,2] = 1"""
        result = integrate_2d_nested(lambda x, y: x * y, Rectangle(0.0, 1.0, 0.0, 2.0), real=True)
        assert result.real == pytest.approx(1.0, rel=1e-9)

    def test_disc_area(self):
        """단위 원판 넓이 = π"""
        result = integrate_2d_nested(lambda x, y: 1.0, Disc(1.0), real=True)
        assert result.real == pytest.approx(math.pi, rel=1e-9)

    def test_whole_plane_gaussian(self):
        """∫∫ e^{-(x²+y²)} = π"""
        result = integrate_2d_nested(lambda x, y: math.exp(-(x * x + y * y)), Disc(math.inf), real=True)
        assert result.real == pytest.approx(math.pi, rel=1e-6)

    def test_invalid_regions(self):
        """잘못된 영역은 ValueError"""
        with pytest.raises(ValueError):
            Rectangle(1.0, 0.0, 0.0, 1.0)
        with pytest.raises(ValueError):
            Disc(0.0)


class TestFixedRules:
    """가우스-르장드르 및 사다리꼴 테스트"""

    def test_gauss_legendre_exact_for_polynomials(self):
        """차수 n 규칙은 2n−1 차 다항식까지 정확"""
        nodes, weights = gauss_legendre(0.0, 2.0, 3)
        assert np.dot(weights, nodes ** 5) == pytest.approx(64.0 / 6.0, rel=1e-13)
        assert weights.sum() == pytest.approx(2.0, rel=1e-14)

    def test_trapezoid_weights_nonuniform(self):
        """비균일 격자 가중치 합은 구간 길이"""
        x = np.array([0.0, 0.1, 0.5, 0.6, 2.0])
        weights = trapezoid_weights(x)
        assert weights.sum() == pytest.approx(2.0)
        assert trapezoid(3.0 * x + 1.0, x) == pytest.approx(1.5 * 4.0 + 2.0, rel=1e-14)

    def test_trapezoid_needs_two_points(self):
        """점 하나로는 가중치 불가"""
        with pytest.raises(ValueError):
            trapezoid_weights(np.array([1.0]))


class TestIntegrateVector:
    """배열 값 적분 테스트"""

    def test_complex_vector(self):
        """[e^{-x}, i·x·e^{-x}] over [0, ∞) = [1, i]"""
        value, error = integrate_vector(
            lambda x: np.array([math.exp(-x), 1j * x * math.exp(-x)]), 0.0, math.inf,
            QuadratureSpec(rel_tol=1e-10),
        )
        np.testing.assert_allclose(value, [1.0, 1j], atol=1e-9)
        assert error < 1e-8

    def test_matrix_shape_preserved(self):
        """3×3 피적분 함수 모양 유지"""
        value, _ = integrate_vector(lambda x: x * np.eye(3), 0.0, 1.0)
        assert value.shape == (3, 3)
        np.testing.assert_allclose(value, 0.5 * np.eye(3), atol=1e-12)


class TestQuadratureSpec:
    """적분 사양 검증 테스트"""

    @pytest.mark.parametrize("kwargs", [
        {"rel_tol": 0.0},
        {"abs_tol": -1.0},
        {"max_subdivisions": 0},
        {"oscillatory_hint": -1.0},
    ])
    def test_invalid(self, kwargs):
        """잘못된 사양은 ValueError"""
        with pytest.raises(ValueError):
            QuadratureSpec(**kwargs)

    def test_tightened(self):
        """내부 단계 사양은 10배 강화"""
        spec = QuadratureSpec(rel_tol=1e-6, abs_tol=1e-20).tightened()
        assert spec.rel_tol == pytest.approx(1e-7)
        assert spec.abs_tol == pytest.approx(1e-21)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
