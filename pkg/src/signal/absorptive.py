"""
Absorptive Signal - 흡수를 포함한 레이저 근축 신호

복소 굴절률 n(Ω) 에서 q_z = √(q² − q_∥²) (Im q_z ≥ 0) 를 사용하여
∫₀^{18/w} dq_∥ q_∥ e^{−q_∥²w²/4} Re[(2 − q_∥²/q²)(T(β) + T(−β))],
T(β) = ∫₀^L du (L − u) e^{i(q_z − β)u} / q_z 를 적분합니다.

항 분해:
    둘째 항 = 감쇠된 자유장 공명항 Re(w)·|A(q_z − β)|²/2·Re(1/q_z),
              A(d) = ∫₀^L e^{idu} du
    첫째 항 = 전체 − 둘째 항 − (β → −β 자유장 짝 항)

Im n → 0 이면 둘째 항은 레이저 근축 공명항으로, 짝 항은 비공명항으로 가고
첫째 항은 모든 Ω 에서 Im n 에 비례하여 0 으로 갑니다.
"""

import cmath
import math
from dataclasses import replace
from typing import List

from ..core.constants import (
    EPSILON_0,
    GAUSSIAN_CUTOFF,
    HBAR,
    PHASE_MATCH_EXPANSION,
    SPEED_OF_LIGHT,
)
from ..core.exceptions import BranchViolation
from ..core.types import AbsorptiveSplit, QuadratureSpec
from ..numerics.quadrature import integrate_1d
from .config import ExperimentConfig

# 가지점 주변 분할점 사다리 (폭 Im q 의 10^k 배)
BRANCH_LADDER_DECADES = 8


def absorptive_prefactor(cfg: ExperimentConfig, omega: float) -> float:
    """ħ(Nω_pΩf|χ|)²[2n_T+1]/(2π²c⁴ε₀³n_c²)"""
    chi = abs(cfg.chi2_at(omega))
    f = cfg.autocorrelation(omega)
    amplitude = cfg.photon_number * cfg.omega_p * omega * f * chi
    return (HBAR * amplitude ** 2 * cfg.thermal_weight(omega)
            / (2.0 * math.pi ** 2 * SPEED_OF_LIGHT ** 4 * EPSILON_0 ** 3 * cfg.n_c ** 2))


def longitudinal_wavenumber(q: complex, q_par: float) -> complex:
    """q_z = √(q² − q_∥²), Im q_z ≥ 0"""
    q_z = cmath.sqrt(q * q - q_par * q_par)
    if q_z.imag < 0:
        q_z = -q_z
    if q_z.imag < 0:
        raise BranchViolation(q_z)
    return q_z


# === 결정 응답 ===

def crystal_response(length: float, q_z: complex, beta: float) -> complex:
    """
    T(β) = (iLd + 1 − e^{iLd})/(q_z d²), d = q_z − β

    |d|·L < 1e-3 이면 제거 가능 특이점 전개 (L²/2 + iL³d/6 − L⁴d²/24)/q_z
    """
    d = q_z - beta
    if abs(d) * length < PHASE_MATCH_EXPANSION:
        return (length ** 2 / 2.0 + 1j * length ** 3 * d / 6.0 - length ** 4 * d * d / 24.0) / q_z
    return (1j * length * d + 1.0 - cmath.exp(1j * length * d)) / (q_z * d * d)


def generated_amplitude(length: float, d: complex) -> complex:
    """A(d) = ∫₀^L e^{idu} du = (e^{iLd} − 1)/(id), 작은 |d|·L 에서 급수"""
    if abs(d) * length < PHASE_MATCH_EXPANSION:
        x = length * d
        return length * (1.0 + 0.5j * x - x * x / 6.0 - 1j * x ** 3 / 24.0)
    return (cmath.exp(1j * length * d) - 1.0) / (1j * d)


def free_field_term(length: float, q_z: complex, beta: float) -> float:
    """|A(q_z − β)|²/2 · Re(1/q_z) (무손실 전파 영역에서 L²sinc²(Ld/2)/(2q_z), 소멸 영역에서 0)"""
    amplitude = generated_amplitude(length, q_z - beta)
    modulus = amplitude.real ** 2 + amplitude.imag ** 2
    return 0.5 * modulus * q_z.real / (q_z.real ** 2 + q_z.imag ** 2)


def branch_points(q: complex, beta: float, upper: float) -> List[float]:
    """
    q_∥ 분할점: 가지점 Re q 와 그 주변 사다리, 위상 정합점 √(Re q² − β²)

    Im q 가 작을수록 q_∥ = Re q 부근 구조가 좁아지므로 폭 Im q 의
    10^k 배 간격으로 분할점을 둡니다.
    """
    center = q.real
    points = {center, math.sqrt(max(center ** 2 - beta ** 2, 0.0))}
    width = abs(q.imag)
    if width > 0.0:
        for k in range(BRANCH_LADDER_DECADES):
            step = width * 10.0 ** k
            if step >= center:
                break
            points.update((center - step, center + step))
    return sorted(p for p in points if 0.0 < p < upper)


def _split_integrals(cfg: ExperimentConfig, omega: float, spec: QuadratureSpec):
    n = cfg.thz_index_at(omega)
    q = n * omega / SPEED_OF_LIGHT
    beta = cfg.beta(omega)
    w = cfg.beam_waist
    length = cfg.crystal_length
    upper = GAUSSIAN_CUTOFF / w

    def weight(q_par: float) -> complex:
        return q_par * math.exp(-(q_par * w) ** 2 / 4.0) * (2.0 - q_par ** 2 / (q * q))

    def total_part(q_par: float) -> float:
        q_z = longitudinal_wavenumber(q, q_par)
        response = crystal_response(length, q_z, beta) + crystal_response(length, q_z, -beta)
        return (weight(q_par) * response).real

    def second_part(q_par: float) -> float:
        q_z = longitudinal_wavenumber(q, q_par)
        return weight(q_par).real * free_field_term(length, q_z, beta)

    def partner_part(q_par: float) -> float:
        q_z = longitudinal_wavenumber(q, q_par)
        return weight(q_par).real * free_field_term(length, q_z, -beta)

    def first_part(q_par: float) -> float:
        q_z = longitudinal_wavenumber(q, q_par)
        wt = weight(q_par)
        response = crystal_response(length, q_z, beta) + crystal_response(length, q_z, -beta)
        free = free_field_term(length, q_z, beta) + free_field_term(length, q_z, -beta)
        return (wt * response).real - wt.real * free

    points = branch_points(q, beta, upper)
    total = integrate_1d(total_part, 0.0, upper, spec, points=points, real=True)
    # 작은 항은 전체 크기 기준 절대 허용 오차
    scaled = replace(spec, abs_tol=max(spec.abs_tol, spec.rel_tol * abs(total.real)))
    parts = [integrate_1d(part, 0.0, upper, scaled, points=points, real=True)
             for part in (first_part, second_part, partner_part)]
    return [total, *parts]


def s2_absorptive(cfg: ExperimentConfig, omega: float) -> AbsorptiveSplit:
    """
    흡수 포함 신호 s²(Ω) 와 첫째/둘째 항

    첫째 항은 자유장 공명/비공명항을 뺀 나머지로 흡수에서 비롯된 기여이며
    둘째 항은 감쇠된 자유장 공명항입니다.

    Args:
        cfg: 실험 설정 (복소 n(Ω) 허용)
        omega: THz 각주파수 (rad/s)

    Returns:
        AbsorptiveSplit (value = first + second + 비공명 자유장 짝 항)

    Raises:
        OutOfTableRange: 표 굴절률 범위 밖
        NonConvergence: q_∥ 적분 허용 오차 미달성
    """
    if omega <= 0:
        return AbsorptiveSplit(0.0, 0.0, 0.0)
    prefactor = absorptive_prefactor(cfg, omega)
    if prefactor == 0.0:
        return AbsorptiveSplit(0.0, 0.0, 0.0)
    total, first, second, partner = _split_integrals(cfg, omega, cfg.quadrature)
    error = total.error + first.error + second.error + partner.error
    return AbsorptiveSplit(
        value=prefactor * total.real,
        first=prefactor * first.real,
        second=prefactor * second.real,
        error=prefactor * error,
    )
