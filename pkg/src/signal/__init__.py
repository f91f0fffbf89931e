"""
Signal - 전기광학 샘플링 신호 스펙트럼 s²(Ω) 와 근사 계층

완전 결과, 레이저 근축, 테일러, 근축, 차단 근축, 흡수 결과와 종/횡 분해,
격자 스펙트럼/분산, 밀도 지도, 펄스 길이 스윕.
"""

from .absorptive import s2_absorptive
from .config import ExperimentConfig
from .density import DensityMaps, default_density_frequency, density_maps
from .full import NodeOrders, s2_full
from .longitudinal import s2_longitudinal, s2_transverse
from .paraxial import s2_laser_paraxial, s2_paraxial, s2_paraxial_cutoff, s2_taylor
from .spectrum import (
    SpectrumResult,
    compute_spectrum,
    evaluate_point,
    frequency_grid,
    integrate_spectrum,
    normalization_sqrt_c,
    variance,
)
from .sweep import dominant_regimes, duration_sweep, pulse_bandwidth

__all__ = [
    "s2_absorptive",
    "ExperimentConfig",
    "DensityMaps",
    "default_density_frequency",
    "density_maps",
    "NodeOrders",
    "s2_full",
    "s2_longitudinal",
    "s2_transverse",
    "s2_laser_paraxial",
    "s2_paraxial",
    "s2_paraxial_cutoff",
    "s2_taylor",
    "SpectrumResult",
    "compute_spectrum",
    "evaluate_point",
    "frequency_grid",
    "integrate_spectrum",
    "normalization_sqrt_c",
    "variance",
    "dominant_regimes",
    "duration_sweep",
    "pulse_bandwidth",
]
