"""
Core Types - 계산 전반에서 사용되는 타입 정의

신호 성분, 평면 선택, 설계 플래그 열거형과 적분 사양/결과 데이터 타입을 정의합니다.
"""

from typing import Callable, Tuple, Union
from enum import Enum
from dataclasses import dataclass

import numpy as np

from .constants import DEFAULT_REL_TOL, DEFAULT_ABS_TOL, DEFAULT_MAX_SUBDIVISIONS


class SignalComponent(str, Enum):
    """신호 스펙트럼 성분"""
    FULL = "full"
    LASER_PARAXIAL = "laser_paraxial"
    TAYLOR = "taylor"
    PARAXIAL = "paraxial"
    PARAXIAL_CUTOFF = "paraxial_cutoff"
    ABSORPTIVE = "absorptive"
    ABSORPTIVE_FIRST = "absorptive_first"
    ABSORPTIVE_SECOND = "absorptive_second"
    LONGITUDINAL = "longitudinal"
    TRANSVERSE = "transverse"
    DELAY_SCAN = "delay_scan"     # 지연 스캔에서 역변환한 스펙트럼


class PlaneChoice(str, Enum):
    """밀도 맵 평면"""
    XY = "xy"
    Z_FREQ = "z_freq"


class Chi2Denominator(str, Enum):
    """χ⁽²⁾ 분산 분모 규약"""
    RESONANT = "resonant"
    AS_PRINTED = "as_printed"


class DurationMapping(str, Enum):
    """펄스 길이 Δt ↔ 사각 스펙트럼 폭 Δω 대응"""
    RECIPROCAL = "reciprocal"     # Δω = 2π/Δt
    FWHM = "fwhm"                 # Δω = 4 ln2 / Δt (가우시안 FWHM 곱)


class GridSpacing(str, Enum):
    """주파수 격자 간격"""
    LOG = "log"
    LINEAR = "linear"


class PulseShape(str, Enum):
    """프로브 펄스 스펙트럼 형태"""
    RECTANGULAR = "rectangular"
    GAUSSIAN = "gaussian"
    TABULATED = "tabulated"


class ThzModel(str, Enum):
    """THz 대역 굴절률 모델"""
    PHONON = "phonon"
    TABULATED = "tabulated"


Position = Union[Tuple[float, float, float], np.ndarray]
Integrand = Callable[[float], complex]


@dataclass(frozen=True)
class QuadratureSpec:
    """적분 허용 오차 및 분할 제한"""
    rel_tol: float = DEFAULT_REL_TOL
    abs_tol: float = DEFAULT_ABS_TOL
    max_subdivisions: int = DEFAULT_MAX_SUBDIVISIONS
    oscillatory_hint: float = 0.0

    def __post_init__(self):
        """데이터 검증"""
        if self.rel_tol <= 0:
            raise ValueError("rel_tol must be positive")
        if self.abs_tol < 0:
            raise ValueError("abs_tol must be non-negative")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be at least 1")
        if self.oscillatory_hint < 0:
            raise ValueError("oscillatory_hint must be non-negative")

    def tightened(self, factor: float = 0.1) -> "QuadratureSpec":
        """중첩 적분 내부 단계용 강화 사양"""
        return QuadratureSpec(
            rel_tol=self.rel_tol * factor,
            abs_tol=self.abs_tol * factor,
            max_subdivisions=self.max_subdivisions,
            oscillatory_hint=self.oscillatory_hint,
        )


@dataclass(frozen=True)
class QuadResult:
    """적분 결과와 오차 추정"""
    value: complex
    error: float

    @property
    def real(self) -> float:
        return float(np.real(self.value))


@dataclass(frozen=True)
class SignalValue:
    """한 주파수에서의 s²(Ω) 값"""
    value: float
    error: float = 0.0


@dataclass(frozen=True)
class AbsorptiveSplit:
    """흡수 결과와 첫째/둘째 항 분해"""
    value: float
    first: float
    second: float
    error: float = 0.0
