"""
Duration Sweep - 펄스 길이에 따른 종/횡 분산 기여

Δt 마다 펄스를 재매개화하고 [0.05 THz, Δω/2π] 로그 격자에서
흡수 결과 전체와 종방향 성분을 적분합니다. 횡방향 분산은 그 차이입니다.
"""

from dataclasses import replace
from typing import Optional, Sequence

import numpy as np
import pandas as pd
from loguru import logger

from ..core.constants import DEFAULT_GRID_POINTS, FS, SWEEP_HEADER, VARIANCE_REL_TOL, angular_to_thz
from ..core.types import DurationMapping, GridSpacing, SignalComponent
from ..materials.phonon import PhononResonanceModel
from ..pulse.spectrum import PulseSpectrum, Rectangular, with_duration
from .config import ExperimentConfig
from .spectrum import compute_spectrum, frequency_grid, integrate_spectrum

SWEEP_MIN_THZ = 0.05


def pulse_bandwidth(p: PulseSpectrum) -> float:
    """f(Ω) 가 0 이 아닌 Ω 상한 (rad/s)"""
    if isinstance(p.shape, Rectangular):
        return p.shape.delta_omega
    lo, hi = p.support
    return hi - lo


def _swept_config(cfg: ExperimentConfig, delta_t: float, mapping: DurationMapping,
                  absorption_enabled: bool) -> ExperimentConfig:
    swept = cfg.with_pulse(with_duration(cfg.pulse, delta_t, mapping))
    if isinstance(cfg.thz_index, PhononResonanceModel):
        swept = swept.with_thz_index(replace(cfg.thz_index, absorption_enabled=absorption_enabled))
    return swept


def duration_sweep(
    cfg: ExperimentConfig,
    delta_t_list: Sequence[float],
    mapping: DurationMapping = DurationMapping.RECIPROCAL,
    points: int = DEFAULT_GRID_POINTS,
    absorption_enabled: bool = True,
    rel_tol: float = VARIANCE_REL_TOL,
    threads: Optional[int] = None,
) -> pd.DataFrame:
    """
    펄스 길이별 분산 표

    Args:
        cfg: 기준 실험 설정 (펄스 형태와 THz 모델을 유지)
        delta_t_list: 펄스 길이 목록 (s)
        mapping: 사각 스펙트럼 폭 대응 규약
        points: Δt 당 Ω 격자 점 수
        absorption_enabled: 포논 모델 흡수 사용 여부
        rel_tol: 격자 절반화 검사 허용 오차
        threads: 작업 스레드 수

    Returns:
        (delta_t_fs, variance_total, variance_longitudinal, variance_transverse) 표
    """
    rows = []
    components = [SignalComponent.ABSORPTIVE, SignalComponent.LONGITUDINAL]
    for delta_t in delta_t_list:
        if delta_t <= 0:
            raise ValueError(f"Pulse duration must be positive, got {delta_t!r}")
        swept = _swept_config(cfg, delta_t, mapping, absorption_enabled)
        f_max = angular_to_thz(pulse_bandwidth(swept.pulse))
        omegas = frequency_grid(SWEEP_MIN_THZ, max(f_max, 2.0 * SWEEP_MIN_THZ), points, GridSpacing.LOG)
        result = compute_spectrum(swept, components, omegas, threads)
        total = integrate_spectrum(result.omegas, result.values[SignalComponent.ABSORPTIVE], rel_tol)
        longitudinal = integrate_spectrum(result.omegas, result.values[SignalComponent.LONGITUDINAL], rel_tol)
        logger.info(f"dt={delta_t / FS:.1f} fs: total={total:.4e}, longitudinal={longitudinal:.4e}")
        rows.append((delta_t / FS, total, longitudinal, total - longitudinal))
    return pd.DataFrame(np.array(rows, dtype=float).reshape(-1, len(SWEEP_HEADER)), columns=SWEEP_HEADER)


def dominant_regimes(table: pd.DataFrame) -> Sequence[str]:
    """행마다 우세한 기여 ("longitudinal" 또는 "transverse")"""
    return [
        "longitudinal" if row.variance_longitudinal > row.variance_transverse else "transverse"
        for row in table.itertuples(index=False)
    ]
