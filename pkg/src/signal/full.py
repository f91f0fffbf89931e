"""
Full Signal - 근축 근사 없는 완전 결과

외부 q_∥ 원판(θ, ψ)과 내부 (ω, k_∥) 적분을 모두 고정 차수 가우스-르장드르
노드로 벡터화하고, 노드 수를 1.5배씩 늘려 연속 추정값의 상대 차이가
full_inner_rel_tol 이하가 될 때까지 반복합니다.

내부 진폭은 레이저 근축 극한에서 e^{q_∥²w²/8}·f(Ω)·sinc(LΔk/2) 가 되도록
c·(2π/w²)·2∫ηE² 로 정규화하며, 공통 인자 e^{q_∥²w²/8} 는 바깥 가우시안과 합칩니다.
"""

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from loguru import logger

from ..core.constants import (
    EPSILON_0,
    GAUSSIAN_CUTOFF,
    HBAR,
    LASER_TRANSVERSE_CUTOFF,
    SPEED_OF_LIGHT,
)
from ..core.exceptions import NonConvergence
from ..core.types import SignalComponent, SignalValue
from ..materials.sellmeier import sellmeier_index_array
from ..numerics.quadrature import gauss_legendre
from ..numerics.special import sinc
from ..pulse.functionals import detected_energy
from ..pulse.spectrum import amplitude, product_support
from .config import ExperimentConfig

MAX_REFINEMENTS = 5
REFINE_FACTOR = 1.5


@dataclass(frozen=True)
class NodeOrders:
    """적분 차원별 노드 수"""
    theta: int = 48
    psi: int = 4
    omega: int = 16
    radial: int = 16
    angle: int = 16

    def refined(self, factor: float = REFINE_FACTOR) -> "NodeOrders":
        return NodeOrders(*(int(math.ceil(v * factor)) for v in
                            (self.theta, self.psi, self.omega, self.radial, self.angle)))


@dataclass
class _LaserBranch:
    """ω 노드에서의 레이저 측 값 (E(ω)E(ω∓Ω), k(ω), k(ω∓Ω))"""
    weights: np.ndarray
    k: np.ndarray
    k_shifted: np.ndarray
    n: np.ndarray
    product: np.ndarray
    eta: np.ndarray
    omegas: np.ndarray


def _laser_branch(cfg: ExperimentConfig, omega: float, sign: int, order: int) -> Optional[_LaserBranch]:
    """sign = −1: E(ω)E(ω−Ω) 항, sign = +1: E(ω)E(ω+Ω) 항"""
    interval = product_support(cfg.pulse, omega, sign)
    if interval is None:
        return None
    nodes, weights = gauss_legendre(interval[0], interval[1], order)
    shifted = nodes + sign * omega
    n = sellmeier_index_array(cfg.laser_index, nodes)
    n_shifted = sellmeier_index_array(cfg.laser_index, shifted)
    product = amplitude(cfg.pulse, nodes) * amplitude(cfg.pulse, shifted)
    return _LaserBranch(
        weights=weights,
        k=n * nodes / SPEED_OF_LIGHT,
        k_shifted=n_shifted * shifted / SPEED_OF_LIGHT,
        n=n,
        product=product,
        eta=np.asarray(cfg.pulse.eta(nodes), dtype=float),
        omegas=nodes,
    )


def _transverse_nodes(waist: float, orders: NodeOrders) -> Tuple[np.ndarray, np.ndarray]:
    """κ 극좌표 노드 (κ 벡터 (M, 2), 가중치 κ dκ dφ·e^{−κ²w²/2})"""
    radii, radial_weights = gauss_legendre(0.0, LASER_TRANSVERSE_CUTOFF / waist, orders.radial)
    angles = np.linspace(0.0, 2.0 * math.pi, orders.angle, endpoint=False)
    rr, aa = np.meshgrid(radii, angles, indexing="ij")
    vectors = np.stack([(rr * np.cos(aa)).ravel(), (rr * np.sin(aa)).ravel()], axis=-1)
    weights = (radial_weights[:, None] * radii[:, None] * (2.0 * math.pi / orders.angle)
               * np.exp(-(radii[:, None] * waist) ** 2 / 2.0)) * np.ones_like(aa)
    return vectors, weights.ravel()


def _branch_amplitudes(
    cfg: ExperimentConfig,
    branch: _LaserBranch,
    sign: int,
    k_par: np.ndarray,
    kappa_weights: np.ndarray,
    q_z: float,
) -> Tuple[complex, complex]:
    """한 ω 항의 (B₋, B₊) 기여 (정규화 전)"""
    k = branch.k[:, None]
    k_par2 = (k_par[:, 0] ** 2 + k_par[:, 1] ** 2)[None, :]
    k_z = np.sqrt((k * k - k_par2).astype(complex))
    polarization = 1.0 - (k_par[:, 0] ** 2)[None, :] / (k * k)
    scalar = (branch.weights * branch.n * branch.eta * branch.omegas * branch.product)[:, None]
    base = scalar * polarization * kappa_weights[None, :] / k_z

    mismatch = branch.k_shifted[:, None] - k_z
    half = 0.5 * cfg.crystal_length
    # E(ω)E(ω−Ω) 항: ΔK∓ = k(ω−Ω) − k_z ± q_z, E(ω)E(ω+Ω) 항: q_z 부호 반전
    sgn = 1.0 if sign < 0 else -1.0
    b_minus = np.sum(base * sinc(half * (mismatch + sgn * q_z)))
    b_plus = np.sum(base * sinc(half * (mismatch - sgn * q_z)))
    return complex(b_minus), complex(b_plus)


def _theta_panels(theta_max: float, theta_pm: Optional[float], order: int) -> Tuple[np.ndarray, np.ndarray]:
    """위상 정합각에서 나눈 θ 가우스-르장드르 노드"""
    if theta_pm is None or not 0.0 < theta_pm < theta_max:
        return gauss_legendre(0.0, theta_max, order)
    first = max(4, int(round(order * theta_pm / theta_max)))
    second = max(4, order - first)
    n1, w1 = gauss_legendre(0.0, theta_pm, first)
    n2, w2 = gauss_legendre(theta_pm, theta_max, second)
    return np.concatenate([n1, n2]), np.concatenate([w1, w2])


def _evaluate(cfg: ExperimentConfig, omega: float, q: float, orders: NodeOrders) -> float:
    """주어진 노드 수에서의 q_∥ 원판 적분값"""
    w = cfg.beam_waist
    branches: List[Tuple[int, _LaserBranch]] = []
    for sign in (-1, +1):
        branch = _laser_branch(cfg, omega, sign, orders.omega)
        if branch is not None:
            branches.append((sign, branch))
    if not branches:
        return 0.0

    kappa, kappa_weights = _transverse_nodes(w, orders)
    norm = SPEED_OF_LIGHT * (2.0 * math.pi / w ** 2) * 2.0 * detected_energy(cfg.pulse)

    theta_max = math.asin(min(1.0, GAUSSIAN_CUTOFF / (q * w)))
    beta = cfg.beta(omega)
    theta_pm = math.acos(beta / q) if beta < q else None
    thetas, theta_weights = _theta_panels(theta_max, theta_pm, orders.theta)
    psis, psi_weights = gauss_legendre(0.0, 0.5 * math.pi, orders.psi)

    total = 0.0
    for theta, theta_weight in zip(thetas, theta_weights):
        s = math.sin(theta)
        q_par, q_z = q * s, q * math.cos(theta)
        radial = q * s * math.exp(-(q_par * w) ** 2 / 4.0)
        for psi, psi_weight in zip(psis, psi_weights):
            q_vec = q_par * np.array([math.cos(psi), math.sin(psi)])
            k_par = kappa - 0.5 * q_vec
            b_minus = b_plus = 0j
            for sign, branch in branches:
                dm, dp = _branch_amplitudes(cfg, branch, sign, k_par, kappa_weights, q_z)
                b_minus += dm
                b_plus += dp
            modulus = (abs(b_minus) ** 2 + abs(b_plus) ** 2) / norm ** 2
            polarization = 1.0 - (q_vec[0] / q) ** 2
            # 4 사분면 대칭
            total += 4.0 * theta_weight * psi_weight * radial * polarization * modulus
    return total


def full_prefactor(cfg: ExperimentConfig, omega: float) -> float:
    """(NLω_p)²ħ|χ|²Ω²/(4π³c⁴ε₀³n_c²)"""
    chi = abs(cfg.chi2_at(omega))
    numerator = (cfg.photon_number * cfg.crystal_length * cfg.omega_p) ** 2 * HBAR * chi ** 2 * omega ** 2
    return numerator / (4.0 * math.pi ** 3 * SPEED_OF_LIGHT ** 4 * EPSILON_0 ** 3 * cfg.n_c ** 2)


def s2_full(cfg: ExperimentConfig, omega: float, orders: Optional[NodeOrders] = None) -> SignalValue:
    """
    완전 결과 s²(Ω)

    Args:
        cfg: 실험 설정 (무손실 THz 굴절률)
        omega: THz 각주파수 (rad/s)
        orders: 시작 노드 수

    Returns:
        SignalValue (오차는 마지막 두 세분화 추정값의 차이)

    Raises:
        AbsorptiveMediumUnsupported: Im n(Ω) ≠ 0
        NonConvergence: 세분화 한도 안에서 허용 오차 미달
    """
    if omega <= 0:
        return SignalValue(0.0)
    n = cfg.real_thz_index(omega, SignalComponent.FULL.value)
    q = n * omega / SPEED_OF_LIGHT
    prefactor = full_prefactor(cfg, omega)

    orders = orders or NodeOrders()
    previous = _evaluate(cfg, omega, q, orders)
    for _ in range(MAX_REFINEMENTS):
        orders = orders.refined()
        current = _evaluate(cfg, omega, q, orders)
        difference = abs(current - previous)
        if difference <= cfg.full_inner_rel_tol * abs(current) or current == 0.0:
            logger.debug(f"full result converged at {orders}, rel change {difference / max(abs(current), 1e-300):.2e}")
            return SignalValue(prefactor * current, prefactor * difference)
        previous = current
    raise NonConvergence(prefactor * previous, prefactor * difference, "full result node refinement")
