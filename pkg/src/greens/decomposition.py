"""
Green's Tensor Decomposition - 종/횡 성분 분해

종방향 그린 텐서의 정칙 부분(z ≠ z′)을 Weyl 표현의 방사/방위각 적분으로 계산하고,
횡방향 성분은 전체 텐서와의 차이로 얻습니다. δ(z−z′) 항은 점별로 평가하지 않습니다.

유한 차분 발산/회전 잔차는 투영 직교성 검사에 사용됩니다.
"""

import math
from typing import Callable

import numpy as np

from ..core.exceptions import CoincidenceRequest, QuadratureFailure
from ..core.types import Position
from ..numerics.quadrature import integrate_vector
from .bulk import GREENS_SPEC, bulk_green_tensor, separation
from .medium import BulkMedium

ANGULAR_TOLERANCE = 1e-13
MAX_ANGULAR_NODES = 8192

TensorField = Callable[[np.ndarray], np.ndarray]


def _angular_tensor(x: float, phi0: float, sign: float) -> np.ndarray:
    """
    ∫₀^{2π} dφ e^{ix·cos(φ−φ₀)}·[(ê_∥ê_∥ − ê_zê_z) + i·sign·M(φ)]

    주기 함수 사다리꼴 적분, 노드 수를 두 배씩 늘려 수렴 확인.
    """
    nodes = 16 + 2 * int(math.ceil(x))
    previous = None
    while nodes <= MAX_ANGULAR_NODES:
        phi = np.linspace(0.0, 2.0 * math.pi, nodes, endpoint=False)
        cos, sin = np.cos(phi), np.sin(phi)
        kernel = np.zeros((nodes, 3, 3), dtype=complex)
        kernel[:, 0, 0] = cos * cos
        kernel[:, 0, 1] = kernel[:, 1, 0] = cos * sin
        kernel[:, 1, 1] = sin * sin
        kernel[:, 2, 2] = -1.0
        kernel[:, 0, 2] = kernel[:, 2, 0] = 1j * sign * cos
        kernel[:, 1, 2] = kernel[:, 2, 1] = 1j * sign * sin
        phase = np.exp(1j * x * np.cos(phi - phi0))
        current = 2.0 * math.pi * np.einsum("n,nij->ij", phase, kernel) / nodes
        if previous is not None and np.max(np.abs(current - previous)) <= ANGULAR_TOLERANCE * 2.0 * math.pi:
            return current
        previous = current
        nodes *= 2
    raise QuadratureFailure("angular trapezoid did not converge", {"x": x})


def longitudinal_green(medium: BulkMedium, r: Position, r_prime: Position, omega: float) -> np.ndarray:
    """
    종방향 그린 텐서의 정칙 부분 ^∥G(r, r′, ω)

    u = k_∥|z−z′| 로 무차원화하면
    ^∥G = −1/(8π²k²|Δz|³) ∫₀^∞ u²e^{−u} A(u·ρ/|Δz|) du
    이며 ω 의존성은 1/k² 뿐입니다.

    Args:
        medium: 균질 매질
        r: 관측 위치 (m)
        r_prime: 원천 위치 (m)
        omega: 각주파수 (rad/s)

    Returns:
        복소 대칭 3×3 텐서 (1/m)

    Raises:
        CoincidenceRequest: z = z′ (δ 항은 적분 안에서만 의미를 가짐)
    """
    R, _ = separation(r, r_prime)
    dz = float(R[2])
    if dz == 0.0:
        raise CoincidenceRequest("longitudinal Green's tensor at z = z'")
    k = medium.wavenumber(omega)
    rho = float(math.hypot(R[0], R[1]))
    phi0 = float(math.atan2(R[1], R[0]))
    ratio = rho / abs(dz)
    sign = math.copysign(1.0, dz)

    def integrand(u: float) -> np.ndarray:
        return u * u * math.exp(-u) * _angular_tensor(u * ratio, phi0, sign)

    value, _ = integrate_vector(integrand, 0.0, math.inf, GREENS_SPEC)
    return -value / (8.0 * math.pi ** 2 * k * k * abs(dz) ** 3)


def transverse_green(medium: BulkMedium, r: Position, r_prime: Position, omega: float) -> np.ndarray:
    """^⊥G = G − ^∥G"""
    return bulk_green_tensor(medium, r, r_prime, omega) - longitudinal_green(medium, r, r_prime, omega)


# === 투영 잔차 ===

def _partial(field: TensorField, r: np.ndarray, axis: int, step: float) -> np.ndarray:
    offset = np.zeros(3)
    offset[axis] = step
    return (field(r + offset) - field(r - offset)) / (2.0 * step)


def divergence_residual(field: TensorField, r: Position, step: float) -> np.ndarray:
    """Σ_i ∂_i T_ij (중심 차분), 횡방향 텐서에서 0"""
    r = np.asarray(r, dtype=float)
    return sum(_partial(field, r, i, step)[i, :] for i in range(3))


def curl_residual(field: TensorField, r: Position, step: float) -> np.ndarray:
    """(∇ × T)_ij = ε_ikl ∂_k T_lj (중심 차분), 종방향 텐서에서 0"""
    r = np.asarray(r, dtype=float)
    d = [_partial(field, r, axis, step) for axis in range(3)]
    curl = np.zeros((3, 3), dtype=complex)
    curl[0] = d[1][2] - d[2][1]
    curl[1] = d[2][0] - d[0][2]
    curl[2] = d[0][1] - d[1][0]
    return curl
