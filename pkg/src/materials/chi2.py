"""
Chi2 Dispersion - 2차 비선형 감수율

상수 모드는 설정값을 그대로, 분산 모드는 n_ref⁴ε₀r41/2·[1 + C₀·D(Ω)] 를 반환합니다.
D(Ω)는 공명형 ω_TO²/(ω_TO² − Ω² − iγΩ) (Ω → 0 에서 1) 또는
원 표기형 ω_TO²/(Ω − iΩγ) (주파수를 2π·THz 단위로, ħ = 1) 중 하나입니다.
"""

from dataclasses import dataclass
from enum import Enum

from ..core.constants import EPSILON_0, TWO_PI, THZ
from ..core.exceptions import NonpositiveFrequency
from ..core.types import Chi2Denominator


class Chi2Mode(str, Enum):
    """χ⁽²⁾ 모드"""
    CONSTANT = "constant"
    DISPERSIVE = "dispersive"


@dataclass(frozen=True)
class Chi2Model:
    """χ⁽²⁾ 모델 (r41은 m/V, 주파수는 rad/s, 상수값은 C·V⁻²)"""
    mode: Chi2Mode
    r41: float = 0.0
    c0: float = 0.0
    omega_to: float = 0.0
    gamma: float = 0.0
    n_ref: float = 1.0
    constant_value: float = 0.0
    denominator: Chi2Denominator = Chi2Denominator.RESONANT

    def __post_init__(self):
        """데이터 검증"""
        if self.mode == Chi2Mode.CONSTANT:
            if self.constant_value == 0:
                raise ValueError("Constant chi2 mode needs a nonzero value")
        else:
            if self.r41 == 0:
                raise ValueError("Dispersive chi2 mode needs r41")
            if self.n_ref <= 0:
                raise ValueError("n_ref must be positive")
            if self.c0 != 0 and self.omega_to <= 0:
                raise ValueError("omega_TO must be positive when C0 != 0")
            if self.gamma < 0:
                raise ValueError("gamma must be non-negative")

    @property
    def plateau(self) -> float:
        """고주파 극한 크기 (상수 모드에서는 설정값)"""
        if self.mode == Chi2Mode.CONSTANT:
            return self.constant_value
        return self.n_ref ** 4 * EPSILON_0 * self.r41 / 2.0

    def scaled(self, factor: float) -> "Chi2Model":
        """r41(또는 상수값)을 factor배 한 모델"""
        return Chi2Model(
            mode=self.mode,
            r41=self.r41 * factor,
            c0=self.c0,
            omega_to=self.omega_to,
            gamma=self.gamma,
            n_ref=self.n_ref,
            constant_value=self.constant_value * factor,
            denominator=self.denominator,
        )


def _dispersion_factor(model: Chi2Model, omega: float) -> complex:
    if model.denominator == Chi2Denominator.RESONANT:
        return model.omega_to ** 2 / complex(
            model.omega_to ** 2 - omega ** 2, -model.gamma * omega
        )
    # 2π·THz 단위, ħ = 1
    unit = TWO_PI * THZ
    f_to = model.omega_to / unit
    f_omega = omega / unit
    f_gamma = model.gamma / unit
    return f_to ** 2 / complex(f_omega, -f_omega * f_gamma)


def chi2_disp(model: Chi2Model, omega: float) -> complex:
    """
    주파수 의존 χ⁽²⁾(Ω)

    Args:
        model: χ⁽²⁾ 모델
        omega: THz 각주파수 (rad/s)

    Returns:
        복소 감수율 (C·V⁻²)

    Raises:
        NonpositiveFrequency: 분산 모드에서 Ω ≤ 0
    """
    if model.mode == Chi2Mode.CONSTANT:
        return complex(model.constant_value, 0.0)
    if not omega > 0:
        raise NonpositiveFrequency(omega, "chi2_disp")
    if model.c0 == 0:
        return complex(model.plateau, 0.0)
    return model.plateau * (1.0 + model.c0 * _dispersion_factor(model, omega))
