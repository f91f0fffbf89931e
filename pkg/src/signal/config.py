"""
Experiment Config - 신호 계산에 필요한 실험 매개변수 묶음

결정 길이, 온도, 레이저/THz 굴절률, χ⁽²⁾, 프로브 펄스를 보관하고
n(ω_c), n_g, ω_p 같은 파생량을 한 번만 계산합니다.
"""

import math
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Optional

from loguru import logger

from ..core.constants import FULL_INNER_REL_TOL, SPEED_OF_LIGHT, angular_to_thz
from ..core.exceptions import AbsorptiveMediumUnsupported
from ..core.interfaces import IRefractiveIndex
from ..core.types import QuadratureSpec
from ..materials.chi2 import Chi2Model, chi2_disp
from ..materials.sellmeier import SellmeierModel, group_index, sellmeier_index
from ..materials.thermal import thermal_occupation
from ..pulse.functionals import mean_detected_frequency, spectral_autocorrelation
from ..pulse.spectrum import PulseSpectrum


@dataclass(frozen=True)
class ExperimentConfig:
    """단일 빔 전기광학 샘플링 실험"""
    crystal_length: float
    temperature: float
    laser_index: SellmeierModel
    thz_index: IRefractiveIndex
    chi2: Chi2Model
    pulse: PulseSpectrum
    group_index_override: Optional[float] = None
    quadrature: QuadratureSpec = field(default_factory=QuadratureSpec)
    full_inner_rel_tol: float = FULL_INNER_REL_TOL

    def __post_init__(self):
        """데이터 검증"""
        if self.crystal_length <= 0:
            raise ValueError("Crystal length must be positive")
        if self.temperature < 0:
            raise ValueError("Temperature must be non-negative")
        if self.group_index_override is not None and self.group_index_override <= 0:
            raise ValueError("Group index override must be positive")
        if not 0 < self.full_inner_rel_tol < 1:
            raise ValueError("full_inner_rel_tol must lie in (0, 1)")
        if not self.satisfies_rayleigh:
            logger.warning(
                f"Rayleigh length {self.rayleigh_length:.3e} m is shorter than the crystal "
                f"({self.crystal_length:.3e} m); paraxial beam model is questionable"
            )

    # === 파생량 ===

    @property
    def beam_waist(self) -> float:
        return self.pulse.beam_waist

    @property
    def photon_number(self) -> float:
        return self.pulse.photon_number

    @property
    def omega_c(self) -> float:
        return self.pulse.omega_c

    @cached_property
    def n_c(self) -> float:
        """레이저 중심 굴절률 n(ω_c)"""
        return sellmeier_index(self.laser_index, self.omega_c)

    @cached_property
    def analytic_group_index(self) -> float:
        return group_index(self.laser_index, self.omega_c)

    @property
    def group_index(self) -> float:
        """신호 공식에 쓰는 군굴절률 (설정값 우선)"""
        if self.group_index_override is not None:
            return self.group_index_override
        return self.analytic_group_index

    @cached_property
    def omega_p(self) -> float:
        return mean_detected_frequency(self.pulse)

    @property
    def rayleigh_length(self) -> float:
        """w²k/2, k = n(ω_c)ω_c/c"""
        k = self.n_c * self.omega_c / SPEED_OF_LIGHT
        return self.beam_waist ** 2 * k / 2.0

    @property
    def satisfies_rayleigh(self) -> bool:
        return self.rayleigh_length >= self.crystal_length

    # === 주파수별 물리량 ===

    def thz_index_at(self, omega: float) -> complex:
        return complex(self.thz_index.index(omega))

    def real_thz_index(self, omega: float, component: str) -> float:
        """무손실 성분용 실수 굴절률 (Im n ≠ 0 이면 거부)"""
        n = self.thz_index_at(omega)
        if n.imag != 0.0:
            raise AbsorptiveMediumUnsupported(component, n.imag)
        return n.real

    def chi2_at(self, omega: float) -> complex:
        return chi2_disp(self.chi2, omega)

    def autocorrelation(self, omega: float) -> float:
        return spectral_autocorrelation(self.pulse, omega)

    def thermal_weight(self, omega: float) -> float:
        """[2n_T(Ω) + 1]"""
        return 2.0 * thermal_occupation(omega, self.temperature) + 1.0

    def beta(self, omega: float) -> float:
        """n_g·Ω/c"""
        return self.group_index * omega / SPEED_OF_LIGHT

    def paraxial_cutoff(self, omega: float) -> bool:
        """n(Ω)Ω < cπ/w 이면 True"""
        n = self.thz_index_at(omega).real
        return n * omega < SPEED_OF_LIGHT * math.pi / self.beam_waist

    # === 변형 ===

    def with_pulse(self, pulse: PulseSpectrum) -> "ExperimentConfig":
        return replace(self, pulse=pulse)

    def with_thz_index(self, index: IRefractiveIndex) -> "ExperimentConfig":
        return replace(self, thz_index=index)

    def with_chi2(self, chi2: Chi2Model) -> "ExperimentConfig":
        return replace(self, chi2=chi2)

    def describe(self) -> str:
        return (
            f"L={self.crystal_length:.3e} m, w={self.beam_waist:.3e} m, T={self.temperature:g} K, "
            f"f_c={angular_to_thz(self.omega_c):.1f} THz, n_c={self.n_c:.4f}, n_g={self.group_index:.4f}"
        )
