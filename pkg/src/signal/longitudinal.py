"""
Longitudinal Signal - 종방향(물질) 요동 기여와 횡방향 나머지

s²_∥ = (Nω_p/(n_c c))²ħ|χ|²f²Im ε/(ε₀³π³|n|⁴)·[2n_T+1]
       ·{2L/w² − (Lβ²/2)·e^z Γ(z) + ∫₀^{18/w} k²e^{−k²w²/4}Re[(e^{−(k+iβ)L} − 1)/(k+iβ)²] dk},
z = (βw/2)². 횡방향은 흡수 결과 전체에서 종방향을 뺀 값입니다.
"""

import cmath
import math

from ..core.constants import EPSILON_0, GAUSSIAN_CUTOFF, HBAR, SPEED_OF_LIGHT
from ..core.types import SignalValue
from ..materials.thz import thz_permittivity
from ..numerics.quadrature import integrate_1d
from ..numerics.special import scaled_incomplete_gamma0
from .absorptive import s2_absorptive
from .config import ExperimentConfig


def longitudinal_bracket(cfg: ExperimentConfig, omega: float) -> SignalValue:
    """중괄호 안의 기하 인자 (m⁻¹)"""
    length = cfg.crystal_length
    w = cfg.beam_waist
    beta = cfg.beta(omega)
    z = (beta * w / 2.0) ** 2

    def integrand(k: float) -> float:
        s = complex(k, beta)
        return k * k * math.exp(-(k * w) ** 2 / 4.0) * ((cmath.exp(-s * length) - 1.0) / (s * s)).real

    tail = integrate_1d(integrand, 0.0, GAUSSIAN_CUTOFF / w, cfg.quadrature, real=True)
    value = 2.0 * length / w ** 2 - 0.5 * length * beta ** 2 * scaled_incomplete_gamma0(z) + tail.real
    return SignalValue(value, tail.error)


def s2_longitudinal(cfg: ExperimentConfig, omega: float) -> SignalValue:
    """
    종방향 요동 신호 s²_∥(Ω)

    Args:
        cfg: 실험 설정
        omega: THz 각주파수 (rad/s)

    Returns:
        SignalValue (Im ε(Ω) = 0 이면 정확히 0)
    """
    if omega <= 0:
        return SignalValue(0.0)
    eps = thz_permittivity(cfg.thz_index, omega)
    if eps.imag == 0.0:
        return SignalValue(0.0)
    f = cfg.autocorrelation(omega)
    if f == 0.0:
        return SignalValue(0.0)
    n = cfg.thz_index_at(omega)
    chi = abs(cfg.chi2_at(omega))
    prefactor = ((cfg.photon_number * cfg.omega_p / (cfg.n_c * SPEED_OF_LIGHT)) ** 2
                 * HBAR * chi ** 2 * f ** 2 * eps.imag
                 / (EPSILON_0 ** 3 * math.pi ** 3 * abs(n) ** 4)
                 * cfg.thermal_weight(omega))
    bracket = longitudinal_bracket(cfg, omega)
    return SignalValue(prefactor * bracket.value, abs(prefactor) * bracket.error)


def s2_transverse(cfg: ExperimentConfig, omega: float) -> SignalValue:
    """s²_⊥ = s²(흡수 결과) − s²_∥"""
    total = s2_absorptive(cfg, omega)
    longitudinal = s2_longitudinal(cfg, omega)
    return SignalValue(total.value - longitudinal.value, total.error + longitudinal.error)
