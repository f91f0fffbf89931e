"""
Pulse Functionals - 펄스 범함수 ω_p, f(Ω), N

모든 신호 공식은 펄스 진폭을 이 세 범함수를 통해서만 사용합니다.
η ≡ 1 인 사각형/가우시안 펄스는 닫힌 형태 빠른 경로를 사용하고,
그 외에는 적분으로 계산합니다.
"""

import math
from typing import Optional

from ..core.constants import EPSILON_0, HBAR, SPEED_OF_LIGHT
from ..core.types import QuadratureSpec
from ..numerics.quadrature import integrate_1d
from .spectrum import Gaussian, PulseSpectrum, Rectangular, amplitude, product_support

PULSE_SPEC = QuadratureSpec(rel_tol=1e-10, max_subdivisions=500)


def _points(p: PulseSpectrum):
    shape = p.shape
    if isinstance(shape, Gaussian):
        return [shape.omega_c]
    if isinstance(shape, Rectangular):
        return None
    return list(shape.omegas[1:-1])


def _weighted_energy(p: PulseSpectrum, power: int = 0) -> float:
    """∫ η(ω) E_p(ω)² ω^power dω"""
    lo, hi = p.support
    return integrate_1d(
        lambda w: float(p.eta(w)) * amplitude(p, w) ** 2 * w ** power,
        lo, hi, PULSE_SPEC, points=_points(p), real=True,
    ).real


def mean_detected_frequency(p: PulseSpectrum) -> float:
    """
    평균 검출 주파수 ω_p = ∫ηE² / ∫(η/ω)E²

    Args:
        p: 펄스 스펙트럼

    Returns:
        ω_p (rad/s)
    """
    shape = p.shape
    if p.unit_efficiency and isinstance(shape, Rectangular):
        return shape.delta_omega / math.log(shape.upper / shape.lower)
    return _weighted_energy(p, 0) / _weighted_energy(p, -1)


def _overlap(p: PulseSpectrum, omega: float, sign: int) -> float:
    interval = product_support(p, omega, sign)
    if interval is None:
        return 0.0
    a, b = interval
    return integrate_1d(
        lambda w: amplitude(p, w) * amplitude(p, w + sign * omega),
        a, b, PULSE_SPEC, real=True,
    ).real


def spectral_autocorrelation(p: PulseSpectrum, omega: float) -> float:
    """
    스펙트럼 자기상관 f(Ω) (Ω에 대해 짝함수)

    Args:
        p: 펄스 스펙트럼
        omega: THz 각주파수 (rad/s)

    Returns:
        f(Ω) ≥ 0
    """
    omega = abs(omega)
    shape = p.shape
    if p.unit_efficiency:
        if isinstance(shape, Rectangular):
            return max(0.0, 1.0 - omega / shape.delta_omega)
        if isinstance(shape, Gaussian):
            return math.exp(-omega ** 2 / (2.0 * shape.sigma ** 2))
    numerator = _overlap(p, omega, +1) + _overlap(p, omega, -1)
    return numerator / (2.0 * _weighted_energy(p, 0))


def photon_number(p: PulseSpectrum, n_c: float) -> float:
    """N = 4πε₀c·n(ω_c)·∫ (η/ħω) E_p² dω (현재 진폭 스케일 기준)"""
    shape = p.shape
    if p.unit_efficiency and isinstance(shape, Rectangular):
        log_integral = p.amplitude_scale ** 2 * math.log(shape.upper / shape.lower)
    else:
        log_integral = _weighted_energy(p, -1)
    return 4.0 * math.pi * EPSILON_0 * SPEED_OF_LIGHT * n_c * log_integral / HBAR


def photon_number_scale(p: PulseSpectrum, n_c: float, target: Optional[float] = None) -> float:
    """
    설정된 N을 주는 진폭 배율

    Args:
        p: 펄스 스펙트럼
        n_c: 레이저 중심 굴절률 n(ω_c)
        target: 목표 광자수 (기본: p.photon_number)

    Returns:
        E_p에 곱할 배율 √(N_target / N_unit)
    """
    target = p.photon_number if target is None else target
    if target <= 0:
        raise ValueError("Target photon number must be positive")
    unit = photon_number(p.rescaled(1.0 / p.amplitude_scale), n_c)
    return math.sqrt(target / unit)


def detected_energy(p: PulseSpectrum) -> float:
    """∫ η(ω) E_p(ω)² dω"""
    shape = p.shape
    if p.unit_efficiency and isinstance(shape, Rectangular):
        return p.amplitude_scale ** 2 * shape.delta_omega
    return _weighted_energy(p, 0)
