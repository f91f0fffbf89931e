"""
Bulk Green's Tensor - 균질 결정의 다이애딕 그린 텐서

Weyl 분해를 k_z 경로 위의 1차원 적분으로 축약합니다. 분리 벡터를 z 축으로
회전시키면 방위각 적분은 편광 다이애드의 평균이 되고, 일반 위치의 텐서는
G = a·I + b·R̂R̂ 로 조립됩니다.

k_∥ ∈ [0, ∞) 적분은 k_∥dk_∥/k_z = −dk_z 치환으로 두 구간으로 나뉩니다.
  - 전파 구간: k_z = k·t, t ∈ [0, 1] (가우스-르장드르, 차수 배가 수렴 확인)
  - 소멸 구간: k_z = iκ, κ ∈ [0, ∞) (적응 적분)
분기점 |k_∥| = Re k 의 제곱근 특이점은 치환으로 제거됩니다.
"""

import math
from typing import Tuple

import numpy as np
from loguru import logger

from ..core.exceptions import CoincidenceRequest, NonConvergence
from ..core.types import Position, QuadratureSpec
from ..numerics.quadrature import gauss_legendre, integrate_vector
from .medium import BulkMedium, WeylKernelPoint

GREENS_SPEC = QuadratureSpec(rel_tol=1e-10, max_subdivisions=500)

# 축 대칭 평균에는 8개 방위각 노드로 충분 (편광 다이애드는 2차 삼각 다항식)
AXIS_PHI_NODES = np.linspace(0.0, 2.0 * math.pi, 8, endpoint=False)

SEGMENT_TOLERANCE = 1e-12
MAX_SEGMENT_ORDER = 4096


# === 분리 벡터 ===

def separation(r: Position, r_prime: Position) -> Tuple[np.ndarray, float]:
    """R = r − r′ 와 |R|"""
    R = np.asarray(r, dtype=float) - np.asarray(r_prime, dtype=float)
    if R.shape != (3,):
        raise ValueError("Positions must be three-dimensional")
    return R, float(np.linalg.norm(R))


def _axis_diagonal(point: WeylKernelPoint) -> np.ndarray:
    """방위각 평균 다이애드의 (xx, zz) 성분 (N, 2)"""
    mean = point.mean_dyad(+1)
    return np.stack([mean[:, 0, 0], mean[:, 2, 2]], axis=-1)


# === z 축 분리 적분 ===

def _segment_integral(k: complex, distance: float) -> np.ndarray:
    """
    전파 구간 ∫₀¹ ⟨D⟩(kt)·e^{iktR}·k dt (xx, zz)

    피적분 함수는 정함수이므로 가우스-르장드르 차수를 두 배씩 늘려
    연속 추정값이 일치할 때 수렴으로 판정합니다.
    """
    order = 16 + int(abs(k) * distance)
    previous = None
    while order <= MAX_SEGMENT_ORDER:
        t, w = gauss_legendre(0.0, 1.0, order)
        k_z = k * t
        point = WeylKernelPoint.build(k, k_z, AXIS_PHI_NODES)
        values = _axis_diagonal(point) * (k * np.exp(1j * k_z * distance))[:, None]
        current = np.einsum("n,nc->c", w, values)
        if previous is not None:
            scale = max(float(np.max(np.abs(current))), 1e-300)
            if float(np.max(np.abs(current - previous))) <= SEGMENT_TOLERANCE * scale:
                return current
        previous = current
        order *= 2
    raise NonConvergence(complex(previous[0]), float("nan"), "propagating Weyl segment")


def _evanescent_integral(k: complex, distance: float) -> np.ndarray:
    """소멸 구간 ∫₀^∞ ⟨D⟩(iκ)·e^{−κR} dκ (xx, zz)"""
    def integrand(kappa: float) -> np.ndarray:
        point = WeylKernelPoint.build(k, 1j * kappa, AXIS_PHI_NODES)
        return _axis_diagonal(point)[0] * math.exp(-kappa * distance)

    value, error = integrate_vector(integrand, 0.0, math.inf, GREENS_SPEC)
    logger.debug(f"evanescent Weyl integral R={distance:.4g} m, error {error:.3g}")
    return value


def _axis_components(medium: BulkMedium, distance: float, omega: float) -> Tuple[complex, complex]:
    """
    분리 벡터가 z 축일 때의 (G_xx, G_zz)

    G = (i/4π)·[∫₀ᵏ ⟨D⟩e^{ik_zR}dk_z − i∫₀^∞ ⟨D⟩(iκ)e^{−κR}dκ]
    """
    if distance <= 0:
        raise CoincidenceRequest("complex bulk Green's tensor at r = r'")
    k = medium.wavenumber(omega)
    total = _segment_integral(k, distance) - 1j * _evanescent_integral(k, distance)
    xx, zz = (1j / (4.0 * math.pi)) * total
    return complex(xx), complex(zz)


def _assemble(xx: complex, zz: complex, direction: np.ndarray) -> np.ndarray:
    """G = a·I + b·R̂R̂ (a = G_xx, a + b = G_zz 축 성분)"""
    return xx * np.eye(3, dtype=complex) + (zz - xx) * np.outer(direction, direction)


# === 공개 연산 ===

def bulk_green_tensor(medium: BulkMedium, r: Position, r_prime: Position, omega: float) -> np.ndarray:
    """
    균질 매질 다이애딕 그린 텐서 (3×3, 1/m)

    Args:
        medium: 균질 매질
        r: 관측 위치 (m)
        r_prime: 원천 위치 (m)
        omega: 각주파수 (rad/s)

    Returns:
        복소 3×3 텐서 (δ(z−z′) 항은 r ≠ r′ 에서 기여 없음)

    Raises:
        CoincidenceRequest: r = r′
    """
    R, distance = separation(r, r_prime)
    xx, zz = _axis_components(medium, distance, omega)
    return _assemble(xx, zz, R / distance)


def bulk_green_xx(medium: BulkMedium, r: Position, r_prime: Position, omega: float) -> complex:
    """G_xx(r, r′, ω) (r ≠ r′)"""
    return complex(bulk_green_tensor(medium, r, r_prime, omega)[0, 0])


def im_bulk_green_xx(medium: BulkMedium, r: Position, r_prime: Position, omega: float) -> float:
    """
    Im G_xx(r, r′, ω) (일치점 허용)

    무손실 매질에서 소멸 구간은 실수부에만 기여하므로 전파 구간만 적분합니다.
    흡수 매질에서는 완전 텐서의 허수부를 사용하며 일치점은 허용되지 않습니다.

    Raises:
        CoincidenceRequest: 흡수 매질에서 r = r′
    """
    R, distance = separation(r, r_prime)
    if not medium.is_lossless:
        return float(bulk_green_xx(medium, r, r_prime, omega).imag)

    k = medium.wavenumber(omega)
    xx, zz = _segment_integral(k, distance).real / (4.0 * math.pi)
    # 일치점에서는 Im b = 0 이므로 방향은 임의
    direction = R / distance if distance > 0 else np.array([0.0, 0.0, 1.0])
    return float(xx + (zz - xx) * direction[0] ** 2)
