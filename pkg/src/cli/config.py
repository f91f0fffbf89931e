"""
Run Config - 실행 설정 스키마와 계층 병합

프리셋 YAML → 사용자 YAML(--config) → --set 덮어쓰기 순으로 깊은 병합한 뒤
한 번만 검증합니다. 모든 단계에서 알 수 없는 키는 오류이며, 물리량 키는
단위 접미사를 가집니다 (_um, _mm, _thz, _fs, _k, _c_per_v2, _m_per_v).
"""

import copy
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Tuple

import yaml
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from ..core.constants import DEFAULT_GRID_POINTS, DEFAULT_MAX_SUBDIVISIONS, DEFAULT_REL_TOL, FULL_INNER_REL_TOL
from ..core.exceptions import ConfigurationError, PresetNotFound
from ..core.settings import get_settings
from ..core.types import Chi2Denominator, DurationMapping, GridSpacing, PulseShape, SignalComponent, ThzModel

PRESET_NAMES = ("riek2015", "benea2019")


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


# === 물리 매개변수 ===

class CrystalSection(_Section):
    """결정"""
    length_um: float = Field(..., gt=0, description="결정 길이 L (µm)")
    temperature_k: float = Field(..., ge=0, description="온도 T (K)")


class SellmeierSection(_Section):
    """Sellmeier 계수"""
    a: float = Field(..., gt=0, description="A")
    b: float = Field(..., ge=0, description="B")
    c_um2: float = Field(..., gt=0, description="C (µm²)")


class LaserSection(_Section):
    """레이저 대역 굴절률"""
    sellmeier: SellmeierSection
    group_index: Optional[float] = Field(None, gt=0, description="신호 공식에 쓰는 n_g (없으면 해석적 값)")


class PhononSection(_Section):
    """포논 공명 모델"""
    eps_inf: float = Field(..., gt=0, description="ε∞")
    omega_to_thz: float = Field(..., gt=0, description="ω_TO/2π (THz)")
    omega_lo_thz: float = Field(..., gt=0, description="ω_LO/2π (THz)")
    gamma_thz: float = Field(..., ge=0, description="γ/2π (THz)")
    absorption_enabled: bool = Field(..., description="흡수 사용 여부")


class ThzSection(_Section):
    """THz 대역 굴절률"""
    model: ThzModel
    phonon: Optional[PhononSection] = None
    table_file: Optional[str] = Field(None, description="굴절률 표 CSV (상대 경로는 데이터 디렉터리 기준)")
    absorption_scale: float = Field(1.0, ge=0, description="Im n 배율")

    @model_validator(mode="after")
    def _model_inputs(self) -> "ThzSection":
        if self.model == ThzModel.PHONON and self.phonon is None:
            raise ValueError("thz.model=phonon needs a thz.phonon section")
        if self.model == ThzModel.TABULATED and not self.table_file:
            raise ValueError("thz.model=tabulated needs thz.table_file")
        return self


class Chi2Section(_Section):
    """χ⁽²⁾"""
    mode: Literal["constant", "dispersive"]
    constant_c_per_v2: Optional[float] = Field(None, description="상수 χ⁽²⁾ (C·V⁻²)")
    r41_m_per_v: Optional[float] = Field(None, description="r41 (m/V)")
    c0: float = Field(0.0, description="C₀")
    omega_to_thz: float = Field(0.0, ge=0, description="ω_TO/2π (THz)")
    gamma_thz: float = Field(0.0, ge=0, description="γ/2π (THz)")
    denominator: Chi2Denominator = Chi2Denominator.RESONANT

    @model_validator(mode="after")
    def _mode_inputs(self) -> "Chi2Section":
        if self.mode == "constant" and self.constant_c_per_v2 is None:
            raise ValueError("chi2.mode=constant needs chi2.constant_c_per_v2")
        if self.mode == "dispersive" and self.r41_m_per_v is None:
            raise ValueError("chi2.mode=dispersive needs chi2.r41_m_per_v")
        return self


class PulseSection(_Section):
    """프로브 펄스"""
    shape: PulseShape
    center_thz: Optional[float] = Field(None, gt=0, description="ω_c/2π (THz)")
    bandwidth_thz: Optional[float] = Field(None, gt=0, description="사각 스펙트럼 Δω/2π (THz)")
    duration_fs: Optional[float] = Field(None, gt=0, description="가우시안 Δt (fs)")
    table_file: Optional[str] = Field(None, description="펄스 표 CSV")
    photon_number: float = Field(..., gt=0, description="검출 광자수 N")
    waist_um: float = Field(..., gt=0, description="빔 허리 w (µm)")

    @model_validator(mode="after")
    def _shape_inputs(self) -> "PulseSection":
        if self.shape == PulseShape.RECTANGULAR and (self.center_thz is None or self.bandwidth_thz is None):
            raise ValueError("rectangular pulse needs center_thz and bandwidth_thz")
        if self.shape == PulseShape.GAUSSIAN and (self.center_thz is None or self.duration_fs is None):
            raise ValueError("gaussian pulse needs center_thz and duration_fs")
        if self.shape == PulseShape.TABULATED and not self.table_file:
            raise ValueError("tabulated pulse needs table_file")
        return self


# === 수치/격자 ===

class QuadratureSection(_Section):
    """적분 허용 오차"""
    rel_tol: float = Field(DEFAULT_REL_TOL, gt=0)
    abs_tol: float = Field(0.0, ge=0)
    max_subdivisions: int = Field(DEFAULT_MAX_SUBDIVISIONS, ge=1)
    full_inner_rel_tol: float = Field(FULL_INNER_REL_TOL, gt=0, lt=1)


class GridSection(_Section):
    """Ω 격자"""
    f_min_thz: float = Field(..., gt=0)
    f_max_thz: float = Field(..., gt=0)
    points: int = Field(DEFAULT_GRID_POINTS, ge=2)
    spacing: GridSpacing = GridSpacing.LOG

    @model_validator(mode="after")
    def _ordered(self) -> "GridSection":
        if self.f_max_thz <= self.f_min_thz:
            raise ValueError("grid.f_max_thz must exceed grid.f_min_thz")
        return self


class ScanSection(_Section):
    """지연 스캔"""
    component: SignalComponent = SignalComponent.ABSORPTIVE
    delay_step_fs: float = Field(20.0, gt=0)
    half_points: int = Field(200, ge=1)
    f_min_thz: float = Field(0.1, gt=0)
    f_max_thz: float = Field(3.9, gt=0)
    spectrum_points: int = Field(1200, ge=2)
    taper: bool = False


class DensitySection(_Section):
    """밀도 지도"""
    freq_thz: float = Field(300.0, gt=0, description="xy 지도 주파수")
    points: int = Field(61, ge=3)
    extent_xy_um: Optional[float] = Field(None, gt=0)
    extent_z_um: Optional[float] = Field(None, gt=0)
    f_min_thz: float = Field(1.0, gt=0)
    f_max_thz: float = Field(150.0, gt=0)
    freq_points: int = Field(60, ge=2)


class SweepSection(_Section):
    """펄스 길이 스윕"""
    delta_t_fs: List[float] = Field(default_factory=lambda: [3.0, 5.9, 10.0, 20.0, 40.0, 80.0, 150.0, 300.0])
    mapping: DurationMapping = DurationMapping.RECIPROCAL
    points: int = Field(DEFAULT_GRID_POINTS, ge=3)
    absorption_enabled: bool = True

    @field_validator("delta_t_fs")
    @classmethod
    def _positive(cls, values: List[float]) -> List[float]:
        if not values or any(v <= 0 for v in values):
            raise ValueError("sweep.delta_t_fs must be a non-empty list of positive durations")
        return values


class IngestSection(_Section):
    """실험 스캔 비교"""
    file: Optional[str] = None
    component: SignalComponent = SignalComponent.ABSORPTIVE


class RunConfig(_Section):
    """한 번의 실행 설정"""
    scenario: Literal["riek2015", "benea2019", "custom"]
    crystal: CrystalSection
    laser: LaserSection
    thz: ThzSection
    chi2: Chi2Section
    pulse: PulseSection
    grid: GridSection
    components: List[SignalComponent]
    quadrature: QuadratureSection = Field(default_factory=QuadratureSection)
    scan: ScanSection = Field(default_factory=ScanSection)
    density: DensitySection = Field(default_factory=DensitySection)
    sweep: SweepSection = Field(default_factory=SweepSection)
    ingest: IngestSection = Field(default_factory=IngestSection)
    output_dir: str = "out"

    @field_validator("components")
    @classmethod
    def _non_empty(cls, values: List[SignalComponent]) -> List[SignalComponent]:
        if not values:
            raise ValueError("components must not be empty")
        return list(dict.fromkeys(values))


# === 로드/병합 ===

def deep_merge(base: Dict[str, Any], update: Dict[str, Any]) -> Dict[str, Any]:
    """중첩 사전 깊은 병합 (update 우선, 목록은 교체)"""
    merged = copy.deepcopy(base)
    for key, value in update.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = deep_merge(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)
    return merged


def parse_override(item: str) -> Dict[str, Any]:
    """`a.b.c=value` → {"a": {"b": {"c": value}}} (값은 YAML 스칼라로 해석)"""
    key, sep, raw = item.partition("=")
    key = key.strip()
    if not sep or not key or any(not part for part in key.split(".")):
        raise ConfigurationError(f"Override '{item}' is not of the form dotted.key=value")
    try:
        value = yaml.safe_load(raw) if raw.strip() else None
    except yaml.YAMLError as e:
        raise ConfigurationError(f"Override '{item}' has an unparsable value: {e}")
    for part in reversed(key.split(".")):
        value = {part: value}
    return value


def read_yaml(path: Path) -> Dict[str, Any]:
    """YAML 사전 읽기"""
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise ConfigurationError(f"{path} is not valid YAML: {e}", {"path": str(path)})
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigurationError(f"{path} must contain a mapping at the top level", {"path": str(path)})
    return data


def preset_path(name: str, preset_dir: Path) -> Path:
    path = Path(preset_dir) / f"{name}.yaml"
    if name not in PRESET_NAMES or not path.exists():
        raise PresetNotFound(name, str(preset_dir))
    return path


def load_run_config(
    preset: Optional[str] = None,
    config_file: Optional[Path] = None,
    overrides: Optional[List[str]] = None,
    preset_dir: Optional[Path] = None,
) -> Tuple[RunConfig, Dict[str, Any]]:
    """
    계층 설정 로드

    Args:
        preset: 프리셋 이름 (--preset)
        config_file: 사용자 YAML (--config)
        overrides: `dotted.key=value` 목록 (--set)
        preset_dir: 프리셋 디렉터리

    Returns:
        (RunConfig, 병합된 원시 사전)

    Raises:
        ConfigurationError: 형식 오류, 알 수 없는 키, 누락된 필수 값
        PresetNotFound: 존재하지 않는 프리셋
    """
    preset_dir = Path(preset_dir or get_settings().preset_dir)
    user = read_yaml(Path(config_file)) if config_file else {}
    name = preset or user.get("scenario")
    if preset and user.get("scenario") not in (None, preset):
        raise ConfigurationError(f"--preset {preset} conflicts with scenario '{user.get('scenario')}' in {config_file}")

    merged: Dict[str, Any] = {}
    if name and name != "custom":
        merged = read_yaml(preset_path(name, preset_dir))
        logger.debug(f"Loaded preset {name} from {preset_dir}")
    merged = deep_merge(merged, user)
    for item in overrides or []:
        merged = deep_merge(merged, parse_override(item))
    if name:
        merged["scenario"] = name

    try:
        return RunConfig.model_validate(merged), merged
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or '<root>'}: {err['msg']}" for err in e.errors()
        )
        raise ConfigurationError(f"Invalid run configuration: {problems}", {"errors": len(e.errors())})
