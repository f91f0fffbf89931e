"""
Paraxial Signals - 레이저 근축 및 완전 근축 신호 스펙트럼

레이저 근축 결과는 q_∥ 원판 적분을 방위각 평균 후 θ 치환(q_∥ = q sinθ)으로
1차원 적분합니다. 완전 근축, 4차 테일러, 차단 근사는 닫힌 형태입니다.
무손실(실수 n(Ω)) THz 굴절률이 필요합니다.
"""

import math
from typing import Tuple

from ..core.constants import (
    EPSILON_0,
    GAUSSIAN_CUTOFF,
    HBAR,
    SPEED_OF_LIGHT,
    TAYLOR_SMALL_ARGUMENT,
)
from ..core.types import SignalComponent, SignalValue
from ..numerics.quadrature import integrate_1d
from ..numerics.special import sinc
from .config import ExperimentConfig


# === 공통 인자 ===

def laser_paraxial_prefactor(cfg: ExperimentConfig, omega: float) -> float:
    """(NLω_p)²ħ|χ|²Ω²f²/(4π³c⁴ε₀³n_c²)"""
    chi = abs(cfg.chi2_at(omega))
    f = cfg.autocorrelation(omega)
    numerator = (cfg.photon_number * cfg.crystal_length * cfg.omega_p) ** 2 * HBAR * chi ** 2 * omega ** 2 * f ** 2
    return numerator / (4.0 * math.pi ** 3 * SPEED_OF_LIGHT ** 4 * EPSILON_0 ** 3 * cfg.n_c ** 2)


def paraxial_prefactor(cfg: ExperimentConfig, omega: float, n_omega: float) -> float:
    """(NLω_p)²ħ|χ|²Ωf²/(π²ε₀³c³n_c²n(Ω)w²)"""
    chi = abs(cfg.chi2_at(omega))
    f = cfg.autocorrelation(omega)
    numerator = (cfg.photon_number * cfg.crystal_length * cfg.omega_p) ** 2 * HBAR * chi ** 2 * omega * f ** 2
    return numerator / (
        math.pi ** 2 * EPSILON_0 ** 3 * SPEED_OF_LIGHT ** 3 * cfg.n_c ** 2 * n_omega * cfg.beam_waist ** 2
    )


def phase_mismatch(cfg: ExperimentConfig, omega: float, q_z: float) -> Tuple[float, float]:
    """(Δk₋, Δk₊) = n_gΩ/c ∓ q_z"""
    beta = cfg.beta(omega)
    return beta - q_z, beta + q_z


def _sinc_squared_pair(cfg: ExperimentConfig, dk_minus: float, dk_plus: float) -> Tuple[float, float]:
    half = 0.5 * cfg.crystal_length
    return sinc(half * dk_minus) ** 2, sinc(half * dk_plus) ** 2


# === 레이저 근축 ===

def s2_laser_paraxial(cfg: ExperimentConfig, omega: float, resonant_only: bool = False) -> SignalValue:
    """
    레이저 근축 신호 스펙트럼 s²(Ω)

    ∫_{q_∥≤q} d²q_∥ (1 − q_x²/q²)/q_z·e^{−q_∥²w²/4}(sinc²(LΔk₋/2) + sinc²(LΔk₊/2))
    를 방위각 평균 (1 − q_∥²/2q²) 후 θ 로 적분합니다.

    Args:
        cfg: 실험 설정
        omega: THz 각주파수 (rad/s)
        resonant_only: Δk₋ 항만 유지

    Returns:
        SignalValue
    """
    if omega <= 0:
        return SignalValue(0.0)
    prefactor = laser_paraxial_prefactor(cfg, omega)
    if prefactor == 0.0:
        return SignalValue(0.0)
    n = cfg.real_thz_index(omega, SignalComponent.LASER_PARAXIAL.value)
    q = n * omega / SPEED_OF_LIGHT
    w = cfg.beam_waist
    theta_max = math.asin(min(1.0, GAUSSIAN_CUTOFF / (q * w)))

    def integrand(theta: float) -> float:
        s = math.sin(theta)
        dk_minus, dk_plus = phase_mismatch(cfg, omega, q * math.cos(theta))
        s_minus, s_plus = _sinc_squared_pair(cfg, dk_minus, dk_plus)
        bracket = s_minus if resonant_only else s_minus + s_plus
        return s * (1.0 - 0.5 * s * s) * math.exp(-(q * w * s) ** 2 / 4.0) * bracket

    # Δk₋ = 0 근방 θ를 분할점으로
    points = []
    beta = cfg.beta(omega)
    if beta < q:
        points.append(math.acos(beta / q))
    result = integrate_1d(integrand, 0.0, theta_max, cfg.quadrature, points=points, real=True)
    scale = prefactor * 2.0 * math.pi * q
    return SignalValue(scale * result.real, scale * result.error)


# === 완전 근축 ===

def _paraxial_terms(cfg: ExperimentConfig, omega: float, component: str):
    n = cfg.real_thz_index(omega, component)
    q = n * omega / SPEED_OF_LIGHT
    dk_minus, dk_plus = phase_mismatch(cfg, omega, q)
    return n, q, dk_minus, dk_plus


def s2_paraxial(cfg: ExperimentConfig, omega: float) -> SignalValue:
    """완전 근축 s²(Ω) = base·(sinc²(LΔk₋/2) + sinc²(LΔk₊/2)), q_z = q"""
    if omega <= 0:
        return SignalValue(0.0)
    n, _, dk_minus, dk_plus = _paraxial_terms(cfg, omega, SignalComponent.PARAXIAL.value)
    s_minus, s_plus = _sinc_squared_pair(cfg, dk_minus, dk_plus)
    return SignalValue(paraxial_prefactor(cfg, omega, n) * (s_minus + s_plus))


def _derivative_term(length: float, dk: float) -> float:
    """(sinc(LΔk) − sinc²(LΔk/2))/Δk, 작은 인자에서 급수"""
    u = 0.5 * length * dk
    if abs(u) < TAYLOR_SMALL_ARGUMENT:
        return length * (-u / 6.0 + 2.0 * u ** 3 / 45.0)
    return (sinc(length * dk) - sinc(u) ** 2) / dk


def s2_taylor(cfg: ExperimentConfig, omega: float, leading_order_only: bool = False) -> SignalValue:
    """
    q_∥/q 4차 테일러 전개 s²(Ω)

    base·{(1 − E)(S₋ + S₊) + X/(qw²)·[D(Δk₋) − D(Δk₊)]},
    E = e^{−q²w²/4}, X = 4 − E(4 + q²w²), D(Δk) = (sinc(LΔk) − sinc²(LΔk/2))/Δk.
    괄호 식은 4차 전개를 q_∥ 적분까지 직접 다시 유도한 닫힌 형태로, 흔히 인용되는 형태와 항 배열이 다릅니다.

    Args:
        cfg: 실험 설정
        omega: THz 각주파수 (rad/s)
        leading_order_only: 최저차 항만 (완전 근축과 동일)

    Returns:
        SignalValue
    """
    if omega <= 0:
        return SignalValue(0.0)
    n, q, dk_minus, dk_plus = _paraxial_terms(cfg, omega, SignalComponent.TAYLOR.value)
    base = paraxial_prefactor(cfg, omega, n)
    s_minus, s_plus = _sinc_squared_pair(cfg, dk_minus, dk_plus)
    if leading_order_only:
        return SignalValue(base * (s_minus + s_plus))

    w = cfg.beam_waist
    qw2 = (q * w) ** 2
    gaussian = math.exp(-qw2 / 4.0)
    weight = (4.0 - gaussian * (4.0 + qw2)) / (q * w * w)
    length = cfg.crystal_length
    correction = _derivative_term(length, dk_minus) - _derivative_term(length, dk_plus)
    return SignalValue(base * ((1.0 - gaussian) * (s_minus + s_plus) + weight * correction))


def s2_paraxial_cutoff(cfg: ExperimentConfig, omega: float) -> SignalValue:
    """n(Ω)Ω < cπ/w 에서만 완전 근축 값"""
    if omega <= 0 or not cfg.paraxial_cutoff(omega):
        return SignalValue(0.0)
    return s2_paraxial(cfg, omega)
