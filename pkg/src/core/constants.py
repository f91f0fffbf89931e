"""
Core Constants - 계산 전반에서 사용되는 상수 정의

물리 상수(CODATA 2018 고정값), 단위 변환, 기본 허용 오차와 격자,
적분 절단 상수, 출력 형식 상수를 정의합니다.
"""

import math
from typing import Dict, List

# === 물리 상수 (CODATA 2018, 설정 불가) ===

SPEED_OF_LIGHT = 299792458.0            # m/s
HBAR = 1.054571817e-34                  # J·s
BOLTZMANN = 1.380649e-23                # J/K
EPSILON_0 = 8.8541878128e-12            # F/m
MU_0 = 1.25663706212e-6                 # N/A²
EULER_GAMMA = 0.5772156649015329

# === 단위 변환 ===

TWO_PI = 2.0 * math.pi
THZ = 1e12
UM = 1e-6
MM = 1e-3
FS = 1e-15


def thz_to_angular(freq_thz: float) -> float:
    """일반 주파수(THz) → 각주파수(rad/s)"""
    return TWO_PI * THZ * freq_thz


def angular_to_thz(omega: float) -> float:
    """각주파수(rad/s) → 일반 주파수(THz)"""
    return omega / (TWO_PI * THZ)


def wavelength_um(omega: float) -> float:
    """각주파수에 대응하는 진공 파장 (µm)"""
    return TWO_PI * SPEED_OF_LIGHT / omega / UM


# === 적분 기본값 ===

DEFAULT_REL_TOL = 1e-6
DEFAULT_ABS_TOL = 0.0
DEFAULT_MAX_SUBDIVISIONS = 2000
FULL_INNER_REL_TOL = 1e-3              # 완전 결과 내부 적분 (데스크 규모)
VARIANCE_REL_TOL = 1e-2                # 격자 절반화 검사

# === 절단 및 전환 상수 ===

GAUSSIAN_CUTOFF = 18.0                 # k_∥ ≤ 18/w 에서 e^{-k²w²/4} < 1e-18 수준
LASER_TRANSVERSE_CUTOFF = 9.1          # κ ≤ 9.1/w 에서 e^{-κ²w²/2} < 1e-18
SINC_SERIES_THRESHOLD = 1e-4
GAMMA_SERIES_CROSSOVER = 1.0
PHASE_MATCH_EXPANSION = 1e-3           # |q_z - β|·L 이 이 값 미만이면 전개식 사용
GAUSSIAN_PULSE_SUPPORT = 9.0           # 가우시안 펄스 지지 구간 ±9σ
TAYLOR_SMALL_ARGUMENT = 1e-3

# === 주파수 격자 기본값 (THz) ===

DEFAULT_GRID_POINTS = 200
DENSITY_FREQ_THZ = 300.0
POINTS_PER_OSCILLATION = 8
LEAKAGE_THRESHOLD = 1e-3

# === 출력 형식 ===

FLOAT_FORMAT = "%.10e"
SPECTRUM_HEADER: List[str] = ["freq_thz", "s2", "err", "component"]
NORMALIZED_COLUMNS: List[str] = ["s2_over_n2", "s2_over_sqrt_c"]
DENSITY_XY_HEADER: List[str] = ["x_um", "y_um", "filter", "correlation", "density"]
DENSITY_ZF_HEADER: List[str] = ["z_um", "freq_thz", "filter", "correlation", "density"]
SCAN_HEADER: List[str] = ["delay_fs", "s2"]
TABLE_INDEX_HEADER: List[str] = ["freq_thz", "n_re", "alpha_per_m"]
TABLE_PULSE_HEADER: List[str] = ["freq_thz", "amplitude"]
SWEEP_HEADER: List[str] = [
    "delta_t_fs", "variance_total", "variance_longitudinal", "variance_transverse"
]

# 출력 메타데이터에 기록하는 설계 플래그
DESIGN_FLAGS: Dict[str, str] = {
    "units": "SI internal, ordinary THz in files",
    "sqrt_branch": "principal, Im n >= 0",
    "table_interpolation": "linear",
    "prefactor_index": "n(omega_c)",
    "taylor_partner": "dk_plus",
    "waist_symbol": "w",
    "eta": "1",
    "absorptive_split": "without n_g -> -n_g partner",
    "fourier_convention": "1/(2pi) int S2 exp(i Omega dt) = s2/2",
}

# === 환경 변수 ===

ENV_PREFIX = "EOS_VACUUM_"
