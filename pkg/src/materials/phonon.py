"""
Phonon Resonance Model - THz 대역 포논 공명 굴절률

ε(Ω) = ε∞(1 + (ω_LO² − ω_TO²)/(ω_TO² − Ω² − iγΩ)), n = √ε (주가지, Im n ≥ 0).
흡수를 끄면 실수부만 사용합니다.
"""

import cmath
from dataclasses import dataclass

from ..core.exceptions import DegenerateResonance, NonpositiveFrequency
from ..core.interfaces import IRefractiveIndex


@dataclass(frozen=True)
class PhononResonanceModel(IRefractiveIndex):
    """단일 TO 포논 공명 유전 모델 (주파수는 rad/s)"""
    eps_inf: float
    omega_to: float
    omega_lo: float
    gamma: float
    absorption_enabled: bool = True

    def __post_init__(self):
        """데이터 검증"""
        if self.eps_inf <= 0:
            raise ValueError("eps_inf must be positive")
        if not self.omega_lo > self.omega_to > 0:
            raise ValueError("Require omega_LO > omega_TO > 0")
        if self.gamma < 0:
            raise ValueError("gamma must be non-negative")

    def index(self, omega: float) -> complex:
        return phonon_index(self, omega)

    def permittivity(self, omega: float) -> complex:
        return permittivity(self, omega)

    @property
    def is_lossless(self) -> bool:
        return not self.absorption_enabled

    def static_index(self) -> float:
        """Ω → 0 극한 √ε∞·ω_LO/ω_TO"""
        return (self.eps_inf ** 0.5) * self.omega_lo / self.omega_to


def _raw_permittivity(model: PhononResonanceModel, omega: float) -> complex:
    if omega < 0:
        raise NonpositiveFrequency(omega, "phonon_index")
    if model.gamma == 0 and omega == model.omega_to:
        raise DegenerateResonance(omega)
    strength = model.omega_lo ** 2 - model.omega_to ** 2
    denominator = complex(model.omega_to ** 2 - omega ** 2, -model.gamma * omega)
    eps = model.eps_inf * (1.0 + strength / denominator)
    # 수동 매질: Im ε ≥ 0 (-0.0 부호 정리)
    return complex(eps.real, abs(eps.imag))


def phonon_index(model: PhononResonanceModel, omega: float) -> complex:
    """
    포논 공명 복소 굴절률

    Args:
        model: 포논 모델
        omega: 각주파수 (rad/s, ≥ 0)

    Returns:
        주가지 복소 굴절률, 흡수 비활성 시 실수부만

    Raises:
        DegenerateResonance: γ = 0 이고 Ω = ω_TO
    """
    n = cmath.sqrt(_raw_permittivity(model, omega))
    if not model.absorption_enabled:
        return complex(n.real, 0.0)
    return n


def permittivity(model: PhononResonanceModel, omega: float) -> complex:
    """유전율 (흡수 비활성 시 실수 굴절률의 제곱)"""
    if not model.absorption_enabled:
        return complex(phonon_index(model, omega).real ** 2, 0.0)
    return _raw_permittivity(model, omega)
