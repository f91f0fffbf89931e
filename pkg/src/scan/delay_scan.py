"""
Delay Scan - 지연 스캔 S²(δt) 합성과 푸리에 역변환

규약: (1/2π)∫dδt S²(δt) e^{iΩδt} = ½ s²(|Ω|), 즉
S²(δt) = ∫₀^∞ dΩ s²(Ω) cos(Ωδt),  s²(Ω) = (1/π)∫dδt S²(δt) e^{iΩδt}.

지연 격자는 0 을 포함하는 대칭 균일 격자 δt_j = j·dt (j = −M..M) 이며,
역변환은 사다리꼴 가중 직접 합으로 켤레 격자 Ω_k = πk/(M·dt) (k = 0..M) 에서 계산합니다.
이 격자에서 상수 성분은 Ω = 0 에만 나타나고 ∫dΩ s² = S²(0) 이 정확히 성립합니다.
"""

import math
import warnings
from dataclasses import dataclass, field
from typing import Dict, Optional

import numpy as np
from loguru import logger
from scipy.signal import windows

from ..core.constants import FS, LEAKAGE_THRESHOLD, POINTS_PER_OSCILLATION, TWO_PI
from ..core.exceptions import LeakageWarning, UnderresolvedSpectrum
from ..core.types import SignalComponent
from ..numerics.quadrature import trapezoid_weights
from ..signal.spectrum import SpectrumResult

UNIFORM_RTOL = 1e-9


@dataclass(frozen=True, eq=False)
class DelayScan:
    """대칭 균일 지연 격자 위의 S²(δt)"""
    delays: np.ndarray              # s
    values: np.ndarray
    dt_step: float = 0.0
    flags: Dict[str, bool] = field(default_factory=dict)

    def __post_init__(self):
        """데이터 검증"""
        delays = np.asarray(self.delays, dtype=float)
        values = np.asarray(self.values)
        if delays.ndim != 1 or delays.size < 3 or delays.size % 2 == 0:
            raise ValueError("Delay grid needs an odd number (>= 3) of points centred on zero")
        if values.shape != delays.shape:
            raise ValueError("Delay scan values do not match the delay grid")
        if np.iscomplexobj(values):
            if np.any(values.imag != 0):
                raise ValueError("Delay scan values must be real")
            values = values.real
        values = values.astype(float)
        if not np.all(np.isfinite(values)):
            raise ValueError("Delay scan has non-finite values")
        steps = np.diff(delays)
        step = float(steps.mean())
        if step <= 0 or np.max(np.abs(steps - step)) > UNIFORM_RTOL * step:
            raise ValueError("Delay grid must be uniform and increasing")
        if abs(delays[delays.size // 2]) > UNIFORM_RTOL * step:
            raise ValueError("Delay grid must be symmetric about zero")
        object.__setattr__(self, "delays", delays)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "dt_step", step)

    @property
    def half_points(self) -> int:
        """M (지연 격자 δt_j = j·dt, j = −M..M)"""
        return self.delays.size // 2

    @property
    def delays_fs(self) -> np.ndarray:
        return self.delays / FS

    @property
    def conjugate_grid(self) -> np.ndarray:
        """Ω_k = πk/(M·dt), k = 0..M"""
        m = self.half_points
        return math.pi * np.arange(m + 1) / (m * self.dt_step)

    def at_zero(self) -> float:
        return float(self.values[self.half_points])

    def __add__(self, other: "DelayScan") -> "DelayScan":
        if not np.array_equal(self.delays, other.delays):
            raise ValueError("Delay scans must share the delay grid")
        flags = {k: self.flags.get(k, False) or other.flags.get(k, False)
                 for k in set(self.flags) | set(other.flags)}
        return DelayScan(self.delays, self.values + other.values, self.dt_step, flags)


def symmetric_delays(step: float, half_points: int) -> np.ndarray:
    """δt_j = j·step, j = −M..M"""
    if step <= 0 or half_points < 1:
        raise ValueError("Delay grid needs a positive step and at least one point per side")
    return step * np.arange(-half_points, half_points + 1, dtype=float)


def _pick_component(spectrum: SpectrumResult, component: Optional[SignalComponent]) -> SignalComponent:
    if component is not None:
        return SignalComponent(component)
    if len(spectrum.components) != 1:
        raise ValueError("Spectrum holds several components; choose one for the delay scan")
    return spectrum.components[0]


def required_step(delays: np.ndarray) -> float:
    """cos(Ω·max|δt|) 한 주기에 8 점이 되는 최대 Ω 간격"""
    return TWO_PI / (POINTS_PER_OSCILLATION * float(np.max(np.abs(delays))))


def synthesize_delay_scan(
    spectrum: SpectrumResult,
    delays: np.ndarray,
    component: Optional[SignalComponent] = None,
) -> DelayScan:
    """
    스펙트럼에서 지연 스캔 합성 S²(δt) = ∫ dΩ s²(Ω) cos(Ωδt)

    Args:
        spectrum: 격자 스펙트럼
        delays: 대칭 균일 지연 격자 (s)
        component: 사용할 성분 (성분이 하나면 생략)

    Returns:
        DelayScan (δt 에 대해 짝함수)

    Raises:
        UnderresolvedSpectrum: Ω 간격이 cos(Ω·max|δt|) 진동을 분해하지 못함
    """
    component = _pick_component(spectrum, component)
    delays = np.asarray(delays, dtype=float)
    omegas = spectrum.omegas
    values = spectrum.values[component]

    limit = required_step(delays)
    max_step = float(np.max(np.diff(omegas))) if omegas.size > 1 else math.inf
    if max_step > limit:
        needed = int(math.ceil((omegas[-1] - omegas[0]) / limit)) + 1
        raise UnderresolvedSpectrum(max_step, limit, needed)

    weighted = trapezoid_weights(omegas) * values
    # |δt| 로 계산하여 짝함수를 정확히 보장
    scan = np.cos(np.abs(delays)[:, None] * omegas[None, :]) @ weighted
    logger.debug(f"Synthesized {delays.size} delays up to {np.max(np.abs(delays)) / FS:.1f} fs "
                 f"from {omegas.size} spectral points")
    return DelayScan(delays, scan)


def taper(scan: DelayScan) -> DelayScan:
    """Hann 창 cos²(πδt/2T) 적용"""
    window = windows.hann(scan.delays.size, sym=True)
    flags = dict(scan.flags, taper=True)
    return DelayScan(scan.delays, scan.values * window, scan.dt_step, flags)


def edge_ratio(scan: DelayScan) -> float:
    """가장자리 |S²| 와 최대 |S²| 의 비"""
    peak = float(np.max(np.abs(scan.values)))
    if peak == 0.0:
        return 0.0
    return max(abs(scan.values[0]), abs(scan.values[-1])) / peak


def spectrum_from_delay_scan(scan: DelayScan, apply_taper: bool = False) -> SpectrumResult:
    """
    지연 스캔에서 스펙트럼 복원 s²(Ω_k) = (1/π) Σ_j w_j S²(δt_j) e^{iΩ_k δt_j}

    Args:
        scan: 지연 스캔
        apply_taper: Hann 창 적용 여부

    Returns:
        SpectrumResult (성분 delay_scan, 오차 열은 허수부 잔여)

    Warns:
        LeakageWarning: 가장자리 값이 최대값의 1e-3 초과
    """
    if apply_taper:
        scan = taper(scan)
    ratio = edge_ratio(scan)
    if ratio > LEAKAGE_THRESHOLD:
        message = f"Delay scan edge is {ratio:.2e} of its peak; spectrum will show window leakage"
        logger.warning(message)
        warnings.warn(message, LeakageWarning, stacklevel=2)

    omegas = scan.conjugate_grid
    weights = trapezoid_weights(scan.delays)
    kernel = np.exp(1j * omegas[:, None] * scan.delays[None, :])
    transform = kernel @ (weights * scan.values) / math.pi

    peak = float(np.max(np.abs(transform.real))) if transform.size else 0.0
    if peak > 0:
        logger.debug(f"Inverse transform imaginary residue {np.max(np.abs(transform.imag)) / peak:.2e} of peak")
    component = SignalComponent.DELAY_SCAN
    return SpectrumResult(omegas, {component: transform.real}, {component: np.abs(transform.imag)})


def roundtrip_residual(
    spectrum: SpectrumResult,
    scan: DelayScan,
    component: Optional[SignalComponent] = None,
    apply_taper: bool = False,
) -> float:
    """
    역변환 스펙트럼과 원래 스펙트럼의 최대 차이 (원래 최대값 대비)

    원래 격자 내부(양 끝 제외)에 들어오는 켤레 격자 점만 비교합니다.
    """
    component = _pick_component(spectrum, component)
    original = spectrum.values[component]
    peak = float(np.max(np.abs(original)))
    if peak == 0.0:
        return 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", LeakageWarning)
        recovered = spectrum_from_delay_scan(scan, apply_taper)
    omegas = recovered.omegas
    inside = (omegas > spectrum.omegas[0]) & (omegas < spectrum.omegas[-1])
    if not np.any(inside):
        raise ValueError("Conjugate grid does not overlap the spectrum grid")
    reference = np.interp(omegas[inside], spectrum.omegas, original)
    difference = recovered.values[SignalComponent.DELAY_SCAN][inside] - reference
    return float(np.max(np.abs(difference)) / peak)
