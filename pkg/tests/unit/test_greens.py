"""
Green's Tensor Tests - 균질 매질 그린 텐서와 종/횡 분해 테스트

닫힌 형태 e^{ikR}/(4πR)·[...] 와 종방향 정칙 부분 (3R̂R̂ − I)/(4πk²R³) 를
기준값으로 사용합니다.
"""

import cmath
import math

import numpy as np
import pytest
import sys
from pathlib import Path

# 프로젝트 경로 추가
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from src.core.constants import SPEED_OF_LIGHT, UM, thz_to_angular
from src.core.exceptions import BranchViolation, CoincidenceRequest, NonpositiveFrequency
from src.greens import (
    BulkMedium,
    WeylKernelPoint,
    branch_kz,
    bulk_green_tensor,
    bulk_green_xx,
    curl_residual,
    divergence_residual,
    im_bulk_green_xx,
    longitudinal_green,
    transverse_green,
)
from src.materials import ConstantIndex

OMEGA = thz_to_angular(1.0)


def closed_form_green(k: complex, R: np.ndarray) -> np.ndarray:
    """e^{ikR}/(4πR)[(1 + (ikR−1)/(kR)²)I + ((3 − 3ikR − (kR)²)/(kR)²)R̂R̂]"""
    distance = float(np.linalg.norm(R))
    direction = R / distance
    x = k * distance
    scalar = cmath.exp(1j * x) / (4.0 * math.pi * distance)
    a = 1.0 + (1j * x - 1.0) / (x * x)
    b = (3.0 - 3j * x - x * x) / (x * x)
    return scalar * (a * np.eye(3) + b * np.outer(direction, direction))


def closed_form_longitudinal(k: complex, R: np.ndarray) -> np.ndarray:
    """(3R̂R̂ − I)/(4πk²R³)"""
    distance = float(np.linalg.norm(R))
    direction = R / distance
    return (3.0 * np.outer(direction, direction) - np.eye(3)) / (4.0 * math.pi * k * k * distance ** 3)


@pytest.fixture
def lossless():
    return BulkMedium(ConstantIndex(3.2))


@pytest.fixture
def absorbing():
    return BulkMedium(ConstantIndex(complex(3.2, 0.3)))


class TestBranch:
    """k_z 가지와 편광 벡터 테스트"""

    @pytest.mark.parametrize("k_par", [0.0, 0.5, 2.0, 10.0])
    def test_branch_imaginary_part(self, k_par):
        """Im k_z ≥ 0 (소멸파는 순허수)"""
        k_z = branch_kz(complex(1.0, 0.0), k_par)
        assert k_z.imag >= 0.0
        assert k_z * k_z == pytest.approx(1.0 - k_par ** 2)

    def test_branch_violation(self):
        """Im k_z < 0 은 BranchViolation"""
        with pytest.raises(BranchViolation):
            WeylKernelPoint.build(1.0, -0.5j, np.array([0.0]))

    def test_polarization_completeness(self):
        """전파파에서 e_s e_s + e_p e_p + k̂k̂ = I, e·k = 0"""
        k = 2.0
        point = WeylKernelPoint.from_transverse(k, 0.6, 0.8)
        k_vec = np.array([0.6, 0.8, point.k_z[0].real])
        e_s = point.e_s[0, 0]
        e_p = point.e_p_plus[0, 0]
        assert np.dot(e_s, k_vec) == pytest.approx(0.0, abs=1e-14)
        assert np.dot(e_p, k_vec) == pytest.approx(0.0, abs=1e-14)
        total = point.dyad(+1)[0, 0] + np.outer(k_vec, k_vec) / k ** 2
        np.testing.assert_allclose(total, np.eye(3), atol=1e-14)


class TestBulkGreenTensor:
    """완전 그린 텐서 테스트"""

    @pytest.mark.parametrize("R_um", [
        (0.0, 0.0, 30.0),
        (30.0, 0.0, 0.0),
        (12.0, -7.0, 20.0),
        (1.0, 2.0, 0.5),
    ])
    def test_matches_closed_form_lossless(self, lossless, R_um):
        """무손실 매질 닫힌 형태와 일치"""
        R = np.array(R_um) * UM
        k = lossless.wavenumber(OMEGA)
        expected = closed_form_green(k, R)
        actual = bulk_green_tensor(lossless, R, np.zeros(3), OMEGA)
        np.testing.assert_allclose(actual, expected, rtol=0, atol=1e-7 * np.max(np.abs(expected)))

    def test_matches_closed_form_absorbing(self, absorbing):
        """흡수 매질 (복소 k) 닫힌 형태와 일치"""
        R = np.array([10.0, 5.0, 25.0]) * UM
        k = absorbing.wavenumber(OMEGA)
        expected = closed_form_green(k, R)
        actual = bulk_green_tensor(absorbing, R, np.zeros(3), OMEGA)
        np.testing.assert_allclose(actual, expected, rtol=0, atol=1e-7 * np.max(np.abs(expected)))

    def test_reciprocity(self, lossless):
        """G(r, r′) = G(r′, r)ᵀ, 대칭 텐서"""
        r = np.array([3.0, -4.0, 12.0]) * UM
        r_prime = np.array([-1.0, 2.0, -5.0]) * UM
        forward = bulk_green_tensor(lossless, r, r_prime, OMEGA)
        backward = bulk_green_tensor(lossless, r_prime, r, OMEGA)
        np.testing.assert_allclose(forward, backward.T, rtol=1e-12, atol=0)
        np.testing.assert_allclose(forward, forward.T, rtol=1e-12, atol=0)

    def test_xx_component(self, lossless):
        """G_xx 편의 함수"""
        R = np.array([5.0, 0.0, 20.0]) * UM
        assert bulk_green_xx(lossless, R, np.zeros(3), OMEGA) == bulk_green_tensor(lossless, R, np.zeros(3), OMEGA)[0, 0]

    def test_coincidence_rejected(self, lossless):
        """r = r′ 의 복소 텐서는 요청 불가"""
        with pytest.raises(CoincidenceRequest):
            bulk_green_tensor(lossless, np.zeros(3), np.zeros(3), OMEGA)

    def test_nonpositive_frequency(self, lossless):
        """ω ≤ 0 거부"""
        with pytest.raises(NonpositiveFrequency):
            lossless.wavenumber(0.0)


class TestImaginaryPart:
    """Im G_xx 테스트"""

    def test_coincidence_value(self, lossless):
        """무손실 매질 일치점 Im G_xx = k/(6π)"""
        k = lossless.wavenumber(OMEGA).real
        value = im_bulk_green_xx(lossless, np.zeros(3), np.zeros(3), OMEGA)
        assert value == pytest.approx(k / (6.0 * math.pi), rel=1e-10)

    @pytest.mark.parametrize("R_um", [(20.0, 0.0, 0.0), (0.0, 15.0, 40.0), (3.0, 4.0, 0.0)])
    def test_matches_closed_form(self, lossless, R_um):
        """일반 위치에서 닫힌 형태 허수부"""
        R = np.array(R_um) * UM
        k = lossless.wavenumber(OMEGA)
        expected = closed_form_green(k, R)[0, 0].imag
        value = im_bulk_green_xx(lossless, R, np.zeros(3), OMEGA)
        assert value == pytest.approx(expected, rel=1e-8, abs=1e-10 * k.real)

    def test_frequency_scaling(self, lossless):
        """일치점 값은 ω 에 선형 (k = nω/c)"""
        low = im_bulk_green_xx(lossless, np.zeros(3), np.zeros(3), OMEGA)
        high = im_bulk_green_xx(lossless, np.zeros(3), np.zeros(3), 3.0 * OMEGA)
        assert high == pytest.approx(3.0 * low, rel=1e-10)
        assert low == pytest.approx(3.2 * OMEGA / SPEED_OF_LIGHT / (6.0 * math.pi), rel=1e-10)

    def test_absorbing_coincidence_rejected(self, absorbing):
        """흡수 매질 일치점은 발산"""
        with pytest.raises(CoincidenceRequest):
            im_bulk_green_xx(absorbing, np.zeros(3), np.zeros(3), OMEGA)

    def test_absorbing_off_coincidence(self, absorbing):
        """흡수 매질에서는 완전 텐서의 허수부"""
        R = np.array([0.0, 0.0, 25.0]) * UM
        k = absorbing.wavenumber(OMEGA)
        expected = closed_form_green(k, R)[0, 0].imag
        value = im_bulk_green_xx(absorbing, R, np.zeros(3), OMEGA)
        assert value == pytest.approx(expected, rel=1e-7)


class TestDecomposition:
    """종/횡 분해 테스트"""

    @pytest.mark.parametrize("R_um", [(0.0, 0.0, 20.0), (10.0, 5.0, 20.0), (15.0, -10.0, -8.0)])
    def test_longitudinal_closed_form(self, lossless, R_um):
        """z ≠ z′ 에서 (3R̂R̂ − I)/(4πk²R³)"""
        R = np.array(R_um) * UM
        k = lossless.wavenumber(OMEGA)
        expected = closed_form_longitudinal(k, R)
        actual = longitudinal_green(lossless, R, np.zeros(3), OMEGA)
        np.testing.assert_allclose(actual, expected, rtol=0, atol=1e-7 * np.max(np.abs(expected)))

    def test_longitudinal_coincident_planes(self, lossless):
        """z = z′ 은 CoincidenceRequest"""
        with pytest.raises(CoincidenceRequest):
            longitudinal_green(lossless, np.array([10.0, 0.0, 0.0]) * UM, np.zeros(3), OMEGA)

    def test_transverse_is_difference(self, lossless):
        """^⊥G = G − ^∥G"""
        R = np.array([4.0, 3.0, 12.0]) * UM
        total = bulk_green_tensor(lossless, R, np.zeros(3), OMEGA)
        longitudinal = longitudinal_green(lossless, R, np.zeros(3), OMEGA)
        transverse = transverse_green(lossless, R, np.zeros(3), OMEGA)
        np.testing.assert_allclose(transverse + longitudinal, total, rtol=1e-12, atol=0)

    def test_transverse_is_divergence_free(self, lossless):
        """∇·^⊥G ≈ 0 (중심 차분)"""
        r = np.array([6.0, -3.0, 20.0]) * UM
        step = 0.05 * UM

        def field(x):
            return transverse_green(lossless, x, np.zeros(3), OMEGA)

        scale = np.max(np.abs(field(r))) / np.linalg.norm(r)
        residual = divergence_residual(field, r, step)
        assert np.max(np.abs(residual)) < 1e-3 * scale

    def test_longitudinal_is_curl_free(self, lossless):
        """∇×^∥G ≈ 0 (중심 차분)"""
        r = np.array([6.0, -3.0, 20.0]) * UM
        step = 0.05 * UM

        def field(x):
            return longitudinal_green(lossless, x, np.zeros(3), OMEGA)

        scale = np.max(np.abs(field(r))) / np.linalg.norm(r)
        residual = curl_residual(field, r, step)
        assert np.max(np.abs(residual)) < 1e-3 * scale

    def test_full_tensor_has_curl(self, lossless):
        """완전 텐서의 회전은 횡방향 부분 때문에 0 이 아님"""
        r = np.array([6.0, -3.0, 20.0]) * UM
        step = 0.05 * UM

        def field(x):
            return bulk_green_tensor(lossless, x, np.zeros(3), OMEGA)

        scale = np.max(np.abs(field(r))) / np.linalg.norm(r)
        assert np.max(np.abs(curl_residual(field, r, step))) > 1e-2 * scale


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
