"""
Density Maps - 필터 함수, 진공 상관 함수, 신호 밀도 지도

xy 평면(z = z′ = 0, r′_∥ = 0, 고정 Ω)과 zΩ 평면(r_∥ = r′_∥ = z′ = 0) 두 가지
단면을 만듭니다. 각 필드는 최대 절댓값으로 정규화하고 원래 최대값(scale)을
함께 보관하여 density·s_d = filter·correlation 가 성립합니다.

xy 지도에서 Ω 가 고정이므로 스칼라 인자는 정규화에서 상쇄되어 공간 핵만 계산합니다.
"""

import math
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np
import pandas as pd
from loguru import logger

from ..core.constants import (
    DENSITY_FREQ_THZ,
    DENSITY_XY_HEADER,
    DENSITY_ZF_HEADER,
    HBAR,
    MU_0,
    SPEED_OF_LIGHT,
    UM,
    angular_to_thz,
    thz_to_angular,
)
from ..core.types import PlaneChoice
from ..greens.bulk import im_bulk_green_xx
from ..greens.medium import BulkMedium
from ..materials.thermal import thermal_occupation
from .config import ExperimentConfig


@dataclass(frozen=True, eq=False)
class DensityMaps:
    """정규화된 세 필드와 원래 최대값"""
    plane: PlaneChoice
    axis_a: np.ndarray          # x (m) 또는 z (m)
    axis_b: np.ndarray          # y (m) 또는 Ω (rad/s)
    filter: np.ndarray
    correlation: np.ndarray
    density: np.ndarray
    scales: Dict[str, float]

    def __post_init__(self):
        """데이터 검증"""
        shape = (self.axis_a.size, self.axis_b.size)
        for name in ("filter", "correlation", "density"):
            field = getattr(self, name)
            if field.shape != shape:
                raise ValueError(f"{name} map has shape {field.shape}, expected {shape}")
            if not np.all(np.isfinite(field)):
                raise ValueError(f"{name} map has non-finite values")

    def to_frame(self) -> pd.DataFrame:
        """평면별 헤더의 긴 형식 표"""
        a, b = np.meshgrid(self.axis_a, self.axis_b, indexing="ij")
        if self.plane == PlaneChoice.XY:
            columns = DENSITY_XY_HEADER
            first, second = a.ravel() / UM, b.ravel() / UM
        else:
            columns = DENSITY_ZF_HEADER
            first, second = a.ravel() / UM, angular_to_thz(b.ravel())
        return pd.DataFrame(dict(zip(columns, (
            first, second, self.filter.ravel(), self.correlation.ravel(), self.density.ravel()
        ))))


def _normalized(field: np.ndarray) -> Tuple[np.ndarray, float]:
    scale = float(np.max(np.abs(field)))
    if scale == 0.0:
        return field, 1.0
    return field / scale, scale


def _build(plane: PlaneChoice, axis_a: np.ndarray, axis_b: np.ndarray,
           filter_raw: np.ndarray, correlation_raw: np.ndarray) -> DensityMaps:
    filter_map, s_f = _normalized(filter_raw)
    correlation_map, s_c = _normalized(correlation_raw)
    density_map, s_d = _normalized(filter_map * correlation_map)
    return DensityMaps(plane, axis_a, axis_b, filter_map, correlation_map, density_map,
                       {"filter": s_f, "correlation": s_c, "density": s_d})


def filter_amplitude(cfg: ExperimentConfig, omega: float) -> float:
    """(2|χ|cμ₀Nω_p/(w²n_c))²·f(Ω)²"""
    chi = abs(cfg.chi2_at(omega))
    amplitude = 2.0 * chi * SPEED_OF_LIGHT * MU_0 * cfg.photon_number * cfg.omega_p / (cfg.beam_waist ** 2 * cfg.n_c)
    return amplitude ** 2 * cfg.autocorrelation(omega) ** 2


def correlation_prefactor(cfg: ExperimentConfig, omega: float) -> float:
    """(2ħμ₀/π)Ω²(1/2 + n_T)"""
    return 2.0 * HBAR * MU_0 / math.pi * omega ** 2 * (0.5 + thermal_occupation(omega, cfg.temperature))


def _xy_maps(cfg: ExperimentConfig, omega: float, extent: float, points: int) -> DensityMaps:
    medium = BulkMedium(cfg.thz_index)
    w = cfg.beam_waist
    xs = np.linspace(-extent, extent, points)
    ys = np.linspace(-extent, extent, points)
    filter_raw = np.exp(-(xs[:, None] ** 2 + ys[None, :] ** 2) / w ** 2)
    correlation_raw = np.empty((points, points))
    origin = np.zeros(3)
    for i, x in enumerate(xs):
        for j, y in enumerate(ys):
            correlation_raw[i, j] = im_bulk_green_xx(medium, np.array([x, y, 0.0]), origin, omega)
    return _build(PlaneChoice.XY, xs, ys, filter_raw, correlation_raw)


def _z_freq_maps(cfg: ExperimentConfig, omegas: np.ndarray, extent: float, points: int) -> DensityMaps:
    medium = BulkMedium(cfg.thz_index)
    zs = np.linspace(-extent, extent, points)
    filter_raw = np.empty((points, omegas.size))
    correlation_raw = np.empty((points, omegas.size))
    origin = np.zeros(3)
    for j, omega in enumerate(omegas):
        amplitude = filter_amplitude(cfg, omega)
        prefactor = correlation_prefactor(cfg, omega)
        phase = cfg.beta(omega) * zs
        filter_raw[:, j] = amplitude * np.cos(phase)
        for i, z in enumerate(zs):
            correlation_raw[i, j] = prefactor * im_bulk_green_xx(medium, np.array([0.0, 0.0, z]), origin, omega)
    return _build(PlaneChoice.Z_FREQ, zs, omegas, filter_raw, correlation_raw)


def density_maps(
    cfg: ExperimentConfig,
    plane_choice: PlaneChoice,
    omega_or_grid,
    extent: Optional[float] = None,
    points: int = 61,
) -> DensityMaps:
    """
    필터/상관/밀도 지도

    Args:
        cfg: 실험 설정 (상관 함수는 무손실 THz 굴절률에서 일치점 포함)
        plane_choice: xy 또는 z_freq
        omega_or_grid: xy 는 고정 Ω (rad/s), z_freq 는 Ω 격자
        extent: 공간 축 반폭 (기본: xy 3w, z_freq L)
        points: 공간 축 점 수

    Returns:
        DensityMaps
    """
    plane_choice = PlaneChoice(plane_choice)
    if plane_choice == PlaneChoice.XY:
        omega = float(omega_or_grid)
        extent = extent or 3.0 * cfg.beam_waist
        logger.info(f"xy density map at {angular_to_thz(omega):.1f} THz, {points}x{points} points")
        return _xy_maps(cfg, omega, extent, points)
    omegas = np.asarray(omega_or_grid, dtype=float)
    extent = extent or cfg.crystal_length
    logger.info(f"z-frequency density map, {points}x{omegas.size} points")
    return _z_freq_maps(cfg, omegas, extent, points)


def default_density_frequency() -> float:
    """밀도 지도 기본 주파수 (rad/s)"""
    return thz_to_angular(DENSITY_FREQ_THZ)
