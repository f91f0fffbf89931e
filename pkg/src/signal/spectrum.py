"""
Spectrum - 주파수 격자 위 신호 스펙트럼과 분산

격자 점마다 독립적인 순수 계산이므로 ThreadPoolExecutor 로 병렬 평가하고
결과는 격자 순서로 조립합니다. 분산은 사다리꼴 적분과 격자 절반화 검사로 구합니다.
"""

from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from loguru import logger
from tqdm import tqdm

from ..core.constants import (
    EPSILON_0,
    SPECTRUM_HEADER,
    SPEED_OF_LIGHT,
    VARIANCE_REL_TOL,
    angular_to_thz,
    thz_to_angular,
)
from ..core.exceptions import GridTooCoarse
from ..core.types import AbsorptiveSplit, GridSpacing, SignalComponent, SignalValue
from ..numerics.quadrature import trapezoid
from .absorptive import s2_absorptive
from .config import ExperimentConfig
from .full import s2_full
from .longitudinal import s2_longitudinal
from .paraxial import s2_laser_paraxial, s2_paraxial, s2_paraxial_cutoff, s2_taylor

ABSORPTIVE_COMPONENTS = (
    SignalComponent.ABSORPTIVE,
    SignalComponent.ABSORPTIVE_FIRST,
    SignalComponent.ABSORPTIVE_SECOND,
    SignalComponent.TRANSVERSE,
)

SIMPLE_COMPONENTS: Dict[SignalComponent, Callable[[ExperimentConfig, float], SignalValue]] = {
    SignalComponent.FULL: s2_full,
    SignalComponent.LASER_PARAXIAL: s2_laser_paraxial,
    SignalComponent.TAYLOR: s2_taylor,
    SignalComponent.PARAXIAL: s2_paraxial,
    SignalComponent.PARAXIAL_CUTOFF: s2_paraxial_cutoff,
    SignalComponent.LONGITUDINAL: s2_longitudinal,
}


@dataclass(frozen=True, eq=False)
class SpectrumResult:
    """격자 Ω 위의 성분별 s²(Ω) 와 적분 오차 추정"""
    omegas: np.ndarray
    values: Dict[SignalComponent, np.ndarray]
    errors: Dict[SignalComponent, np.ndarray]

    def __post_init__(self):
        """데이터 검증"""
        omegas = np.asarray(self.omegas, dtype=float)
        if omegas.ndim != 1 or omegas.size < 1:
            raise ValueError("Spectrum grid must be one-dimensional and non-empty")
        if np.any(np.diff(omegas) <= 0):
            raise ValueError("Spectrum grid must be strictly increasing")
        for component, values in self.values.items():
            if np.shape(values) != omegas.shape:
                raise ValueError(f"Component {component.value} does not match the grid")
            if not np.all(np.isfinite(values)):
                raise ValueError(f"Component {component.value} has non-finite values")
        object.__setattr__(self, "omegas", omegas)

    @property
    def components(self) -> List[SignalComponent]:
        return list(self.values)

    @property
    def freq_thz(self) -> np.ndarray:
        return angular_to_thz(self.omegas)

    def to_frame(self) -> pd.DataFrame:
        """(freq_thz, s2, err, component) 긴 형식 표"""
        frames = [
            pd.DataFrame({
                "freq_thz": self.freq_thz,
                "s2": self.values[component],
                "err": self.errors[component],
                "component": component.value,
            })
            for component in self.components
        ]
        return pd.concat(frames, ignore_index=True)[SPECTRUM_HEADER]


# === 격자 ===

def frequency_grid(f_min_thz: float, f_max_thz: float, points: int,
                   spacing: GridSpacing = GridSpacing.LOG) -> np.ndarray:
    """THz 범위에서 각주파수 격자 생성"""
    if not 0 < f_min_thz < f_max_thz:
        raise ValueError("Grid bounds must satisfy 0 < f_min < f_max")
    if points < 2:
        raise ValueError("Grid needs at least two points")
    if spacing == GridSpacing.LOG:
        freqs = np.geomspace(f_min_thz, f_max_thz, points)
    else:
        freqs = np.linspace(f_min_thz, f_max_thz, points)
    return np.array([thz_to_angular(f) for f in freqs])


# === 점별 평가 ===

def evaluate_point(cfg: ExperimentConfig, components: Sequence[SignalComponent],
                   omega: float) -> Dict[SignalComponent, SignalValue]:
    """한 Ω 에서 요청 성분 모두 평가 (흡수 분해는 한 번만 계산)"""
    results: Dict[SignalComponent, SignalValue] = {}
    split: Optional[AbsorptiveSplit] = None
    longitudinal: Optional[SignalValue] = None
    for component in components:
        if component in SIMPLE_COMPONENTS:
            if component == SignalComponent.LONGITUDINAL and longitudinal is not None:
                results[component] = longitudinal
                continue
            results[component] = SIMPLE_COMPONENTS[component](cfg, omega)
            if component == SignalComponent.LONGITUDINAL:
                longitudinal = results[component]
        elif component in ABSORPTIVE_COMPONENTS:
            if split is None:
                split = s2_absorptive(cfg, omega)
            if component == SignalComponent.ABSORPTIVE:
                results[component] = SignalValue(split.value, split.error)
            elif component == SignalComponent.ABSORPTIVE_FIRST:
                results[component] = SignalValue(split.first, split.error)
            elif component == SignalComponent.ABSORPTIVE_SECOND:
                results[component] = SignalValue(split.second, split.error)
            else:
                if longitudinal is None:
                    longitudinal = s2_longitudinal(cfg, omega)
                results[component] = SignalValue(split.value - longitudinal.value,
                                                 split.error + longitudinal.error)
        else:
            raise ValueError(f"Component {component.value} cannot be evaluated pointwise")
    return results


def compute_spectrum(
    cfg: ExperimentConfig,
    components: Sequence[SignalComponent],
    omegas: np.ndarray,
    threads: Optional[int] = None,
    progress: bool = False,
) -> SpectrumResult:
    """
    격자 위 스펙트럼 병렬 계산

    Args:
        cfg: 실험 설정
        components: 계산할 성분 목록
        omegas: 증가하는 Ω 격자 (rad/s)
        threads: 작업 스레드 수 (기본: 실행기 기본값)
        progress: tqdm 진행 막대 표시

    Returns:
        SpectrumResult (스레드 수와 무관하게 동일한 값)
    """
    omegas = np.asarray(omegas, dtype=float)
    components = list(dict.fromkeys(SignalComponent(c) for c in components))
    rows: List[Optional[Dict[SignalComponent, SignalValue]]] = [None] * omegas.size
    logger.info(f"Computing {', '.join(c.value for c in components)} on {omegas.size} points "
                f"({angular_to_thz(omegas[0]):.3g}-{angular_to_thz(omegas[-1]):.3g} THz)")

    with ThreadPoolExecutor(max_workers=threads) as executor:
        futures = {executor.submit(evaluate_point, cfg, components, float(omega)): i
                   for i, omega in enumerate(omegas)}
        completed = as_completed(futures)
        if progress:
            completed = tqdm(completed, total=len(futures), desc="spectrum", unit="pt")
        for future in completed:
            rows[futures[future]] = future.result()

    values = {c: np.array([row[c].value for row in rows]) for c in components}
    errors = {c: np.array([row[c].error for row in rows]) for c in components}
    return SpectrumResult(omegas, values, errors)


# === 분산 ===

def _halved(omegas: np.ndarray, values: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    index = np.arange(0, omegas.size, 2)
    if index[-1] != omegas.size - 1:
        index = np.append(index, omegas.size - 1)
    return omegas[index], values[index]


def integrate_spectrum(omegas: np.ndarray, values: np.ndarray,
                       rel_tol: float = VARIANCE_REL_TOL) -> float:
    """
    ∫ s²(Ω) dΩ (사다리꼴) 과 격자 절반화 검사

    Raises:
        GridTooCoarse: 절반 격자 결과와의 상대 차이 > rel_tol
    """
    omegas = np.asarray(omegas, dtype=float)
    values = np.asarray(values, dtype=float)
    full = trapezoid(values, omegas)
    if full == 0.0 or omegas.size < 3:
        return full
    coarse_omegas, coarse_values = _halved(omegas, values)
    halved = trapezoid(coarse_values, coarse_omegas)
    if abs(full - halved) > rel_tol * abs(full):
        raise GridTooCoarse(full, halved, rel_tol)
    return full


def variance(
    cfg: ExperimentConfig,
    component: SignalComponent,
    omega_grid: np.ndarray,
    rel_tol: float = VARIANCE_REL_TOL,
    threads: Optional[int] = None,
) -> float:
    """정규 순서 분산 ⟨:Ŝ²:⟩ = ∫ s²(Ω) dΩ (격자 범위)"""
    result = compute_spectrum(cfg, [component], omega_grid, threads)
    return integrate_spectrum(result.omegas, result.values[component], rel_tol)


def normalization_sqrt_c(cfg: ExperimentConfig) -> float:
    """√C = 2|χ⁽²⁾|Lω_pN/(n_c ε₀ c) (χ 는 고주파 평탄값)"""
    return (2.0 * abs(cfg.chi2.plateau) * cfg.crystal_length * cfg.omega_p * cfg.photon_number
            / (cfg.n_c * EPSILON_0 * SPEED_OF_LIGHT))
