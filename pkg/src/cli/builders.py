"""
Builders - RunConfig 를 계산용 값 객체로 변환

단위 접미사 키(µm, THz, fs)를 내부 SI·rad/s 로 바꾸고, 표 파일의
상대 경로는 데이터 디렉터리 기준으로 찾습니다.
"""

from pathlib import Path
from typing import Optional

import numpy as np

from ..core.constants import FS, UM, thz_to_angular
from ..core.settings import get_settings
from ..core.types import PulseShape, QuadratureSpec, ThzModel
from ..core.interfaces import IRefractiveIndex
from ..materials.chi2 import Chi2Mode, Chi2Model
from ..materials.phonon import PhononResonanceModel
from ..materials.sellmeier import SellmeierModel, sellmeier_index
from ..materials.tabulated import load_tabulated_index
from ..materials.thz import ScaledAbsorptionIndex
from ..pulse.spectrum import Gaussian, PulseSpectrum, Rectangular, load_tabulated_pulse
from ..scan.delay_scan import symmetric_delays
from ..signal.config import ExperimentConfig
from ..signal.spectrum import frequency_grid
from .config import GridSection, RunConfig


def resolve_data_path(name: str, data_dir: Optional[Path] = None) -> Path:
    """절대 경로는 그대로, 상대 경로는 작업 디렉터리 → 데이터 디렉터리 순"""
    path = Path(name)
    if path.is_absolute() or path.exists():
        return path
    return Path(data_dir or get_settings().data_dir) / path


def build_laser_index(run: RunConfig) -> SellmeierModel:
    s = run.laser.sellmeier
    return SellmeierModel(A=s.a, B=s.b, C=s.c_um2)


def build_thz_index(run: RunConfig, data_dir: Optional[Path] = None) -> IRefractiveIndex:
    """THz 굴절률 공급자 (absorption_scale ≠ 1 이면 래핑)"""
    section = run.thz
    index: IRefractiveIndex
    if section.model == ThzModel.PHONON:
        p = section.phonon
        index = PhononResonanceModel(
            eps_inf=p.eps_inf,
            omega_to=thz_to_angular(p.omega_to_thz),
            omega_lo=thz_to_angular(p.omega_lo_thz),
            gamma=thz_to_angular(p.gamma_thz),
            absorption_enabled=p.absorption_enabled,
        )
    else:
        index = load_tabulated_index(resolve_data_path(section.table_file, data_dir))
    if section.absorption_scale != 1.0:
        index = ScaledAbsorptionIndex(index, section.absorption_scale)
    return index


def build_chi2(run: RunConfig, n_ref: float) -> Chi2Model:
    section = run.chi2
    if section.mode == "constant":
        return Chi2Model(mode=Chi2Mode.CONSTANT, constant_value=section.constant_c_per_v2)
    return Chi2Model(
        mode=Chi2Mode.DISPERSIVE,
        r41=section.r41_m_per_v,
        c0=section.c0,
        omega_to=thz_to_angular(section.omega_to_thz),
        gamma=thz_to_angular(section.gamma_thz),
        n_ref=n_ref,
        denominator=section.denominator,
    )


def build_pulse(run: RunConfig, data_dir: Optional[Path] = None) -> PulseSpectrum:
    section = run.pulse
    if section.shape == PulseShape.RECTANGULAR:
        shape = Rectangular(thz_to_angular(section.center_thz), thz_to_angular(section.bandwidth_thz))
    elif section.shape == PulseShape.GAUSSIAN:
        shape = Gaussian(thz_to_angular(section.center_thz), section.duration_fs * FS)
    else:
        shape = load_tabulated_pulse(resolve_data_path(section.table_file, data_dir))
    return PulseSpectrum(shape, section.photon_number, section.waist_um * UM)


def build_experiment(run: RunConfig, data_dir: Optional[Path] = None) -> ExperimentConfig:
    """
    실행 설정 → ExperimentConfig

    Raises:
        ValueError: 값 객체 검증 실패 (CLI 에서 설정 오류로 변환)
        FormatError: 표 파일 형식 오류
    """
    laser = build_laser_index(run)
    pulse = build_pulse(run, data_dir)
    n_ref = sellmeier_index(laser, pulse.omega_c)
    q = run.quadrature
    return ExperimentConfig(
        crystal_length=run.crystal.length_um * UM,
        temperature=run.crystal.temperature_k,
        laser_index=laser,
        thz_index=build_thz_index(run, data_dir),
        chi2=build_chi2(run, n_ref),
        pulse=pulse,
        group_index_override=run.laser.group_index,
        quadrature=QuadratureSpec(rel_tol=q.rel_tol, abs_tol=q.abs_tol, max_subdivisions=q.max_subdivisions),
        full_inner_rel_tol=q.full_inner_rel_tol,
    )


def build_grid(section: GridSection) -> np.ndarray:
    return frequency_grid(section.f_min_thz, section.f_max_thz, section.points, section.spacing)


def build_delays(run: RunConfig) -> np.ndarray:
    return symmetric_delays(run.scan.delay_step_fs * FS, run.scan.half_points)
