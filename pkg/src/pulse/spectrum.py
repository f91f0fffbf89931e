"""
Pulse Spectrum - 프로브 펄스 스펙트럼 형태

사각형, 가우시안, 표 형태의 스펙트럼 진폭 E_p(ω)와 지지 구간을 정의합니다.
ω ≤ 0 에서 E_p는 0 입니다.
"""

import math
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Callable, Optional, Tuple, Union

import numpy as np
import pandas as pd

from ..core.constants import (
    GAUSSIAN_PULSE_SUPPORT,
    TABLE_PULSE_HEADER,
    TWO_PI,
    thz_to_angular,
)
from ..core.exceptions import FormatError
from ..core.types import DurationMapping, PulseShape


@dataclass(frozen=True)
class Rectangular:
    """[ω_c − Δω/2, ω_c + Δω/2] 에서 1 인 사각 스펙트럼"""
    omega_c: float
    delta_omega: float

    kind = PulseShape.RECTANGULAR

    def __post_init__(self):
        """데이터 검증"""
        if self.omega_c <= 0 or self.delta_omega <= 0:
            raise ValueError("Rectangular pulse needs positive omega_c and delta_omega")
        if self.delta_omega >= 2.0 * self.omega_c:
            raise ValueError("Rectangular pulse would reach negative frequencies (delta_omega >= 2 omega_c)")

    @property
    def lower(self) -> float:
        return self.omega_c - 0.5 * self.delta_omega

    @property
    def upper(self) -> float:
        return self.omega_c + 0.5 * self.delta_omega


@dataclass(frozen=True)
class Gaussian:
    """E_p = √(1/σ)·exp(−(ω−ω_c)²/σ²)/(2π)^{1/4}, σ = √(2/π)/Δt"""
    omega_c: float
    delta_t: float

    kind = PulseShape.GAUSSIAN

    def __post_init__(self):
        """데이터 검증"""
        if self.omega_c <= 0 or self.delta_t <= 0:
            raise ValueError("Gaussian pulse needs positive omega_c and delta_t")

    @property
    def sigma(self) -> float:
        return math.sqrt(2.0 / math.pi) / self.delta_t


@dataclass(frozen=True, eq=False)
class TabulatedPulse:
    """(ω, 진폭) 표본, 선형 보간, 범위 밖 0"""
    omegas: np.ndarray
    amplitudes: np.ndarray

    kind = PulseShape.TABULATED

    def __post_init__(self):
        """데이터 검증"""
        omegas = np.asarray(self.omegas, dtype=float)
        amplitudes = np.asarray(self.amplitudes, dtype=float)
        if omegas.ndim != 1 or omegas.size != amplitudes.size or omegas.size < 2:
            raise ValueError("Tabulated pulse needs matching one-dimensional columns")
        if omegas[0] <= 0 or np.any(np.diff(omegas) <= 0):
            raise ValueError("Tabulated pulse frequencies must be positive and increasing")
        object.__setattr__(self, "omegas", omegas)
        object.__setattr__(self, "amplitudes", amplitudes)

    @property
    def omega_c(self) -> float:
        """진폭 제곱 가중 평균 주파수"""
        weights = self.amplitudes ** 2
        return float(np.sum(weights * self.omegas) / np.sum(weights))


Shape = Union[Rectangular, Gaussian, TabulatedPulse]


@dataclass(frozen=True)
class PulseSpectrum:
    """프로브 펄스 (형태, 광자수 N, 빔 허리 w, 검출 효율 η)"""
    shape: Shape
    photon_number: float
    beam_waist: float
    efficiency: Optional[Callable[[np.ndarray], np.ndarray]] = field(default=None, compare=False)
    amplitude_scale: float = 1.0

    def __post_init__(self):
        """데이터 검증"""
        if self.photon_number <= 0:
            raise ValueError("Photon number must be positive")
        if self.beam_waist <= 0:
            raise ValueError("Beam waist must be positive")
        if self.amplitude_scale <= 0:
            raise ValueError("Amplitude scale must be positive")

    @property
    def omega_c(self) -> float:
        return self.shape.omega_c

    @property
    def unit_efficiency(self) -> bool:
        return self.efficiency is None

    @cached_property
    def support(self) -> Tuple[float, float]:
        return support(self)

    def eta(self, omega):
        """검출 효율 η(ω) (기본 1)"""
        if self.efficiency is None:
            return np.ones_like(np.asarray(omega, dtype=float))
        return self.efficiency(omega)

    def rescaled(self, factor: float) -> "PulseSpectrum":
        return PulseSpectrum(self.shape, self.photon_number, self.beam_waist, self.efficiency,
                             self.amplitude_scale * factor)


def amplitude(p: PulseSpectrum, omega):
    """스펙트럼 진폭 E_p(ω) (배열 입력 가능)"""
    w = np.asarray(omega, dtype=float)
    shape = p.shape
    if isinstance(shape, Rectangular):
        values = np.where((w >= shape.lower) & (w <= shape.upper), 1.0, 0.0)
    elif isinstance(shape, Gaussian):
        sigma = shape.sigma
        values = np.exp(-((w - shape.omega_c) / sigma) ** 2) / math.sqrt(sigma) / (TWO_PI ** 0.25)
        values = np.where(w > 0, values, 0.0)
    else:
        values = np.interp(w, shape.omegas, shape.amplitudes, left=0.0, right=0.0)
    values = p.amplitude_scale * values
    if np.ndim(omega) == 0:
        return float(values)
    return values


def support(p: PulseSpectrum) -> Tuple[float, float]:
    """스펙트럼이 0이 아닌 구간 (가우시안은 ±9σ)"""
    shape = p.shape
    if isinstance(shape, Rectangular):
        return shape.lower, shape.upper
    if isinstance(shape, Gaussian):
        half = GAUSSIAN_PULSE_SUPPORT * shape.sigma
        return max(shape.omega_c - half, 1e-6 * shape.omega_c), shape.omega_c + half
    return float(shape.omegas[0]), float(shape.omegas[-1])


def product_support(p: PulseSpectrum, omega_shift: float, sign: int) -> Optional[Tuple[float, float]]:
    """E_p(ω)·E_p(ω + sign·Ω) 가 0이 아닌 ω 구간 (없으면 None)"""
    lo, hi = p.support
    shift = sign * omega_shift
    a = max(lo, lo - shift)
    b = min(hi, hi - shift)
    if isinstance(p.shape, Gaussian):
        center = p.shape.omega_c - 0.5 * shift
        half = (GAUSSIAN_PULSE_SUPPORT / math.sqrt(2.0)) * p.shape.sigma
        a, b = max(a, center - half), min(b, center + half)
    if b <= a:
        return None
    return a, b


def with_duration(p: PulseSpectrum, delta_t: float,
                  mapping: DurationMapping = DurationMapping.RECIPROCAL) -> PulseSpectrum:
    """펄스 길이 Δt 로 재매개화"""
    shape = p.shape
    if isinstance(shape, Gaussian):
        new_shape: Shape = Gaussian(shape.omega_c, delta_t)
    elif isinstance(shape, Rectangular):
        if mapping == DurationMapping.RECIPROCAL:
            delta_omega = TWO_PI / delta_t
        else:
            delta_omega = 4.0 * math.log(2.0) / delta_t
        new_shape = Rectangular(shape.omega_c, delta_omega)
    else:
        raise ValueError("Tabulated pulses cannot be reparameterized by duration")
    return PulseSpectrum(new_shape, p.photon_number, p.beam_waist, p.efficiency, p.amplitude_scale)


def load_tabulated_pulse(path: Union[str, Path]) -> TabulatedPulse:
    """CSV(freq_thz,amplitude) 파일에서 펄스 표 로드"""
    path = Path(path)
    try:
        frame = pd.read_csv(path, comment="#", skipinitialspace=True)
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise FormatError(str(path), str(e))
    if list(frame.columns) != TABLE_PULSE_HEADER:
        raise FormatError(str(path), f"expected header {','.join(TABLE_PULSE_HEADER)}")
    try:
        return TabulatedPulse(
            omegas=np.array([thz_to_angular(f) for f in frame["freq_thz"].to_numpy(float)]),
            amplitudes=frame["amplitude"].to_numpy(float),
        )
    except ValueError as e:
        raise FormatError(str(path), str(e))
