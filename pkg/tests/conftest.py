"""
Test Configuration - 테스트 설정

pytest 실행을 위한 설정과 픽스처를 정의합니다.
프리셋 실험 설정은 YAML 을 거치지 않고 값 객체로 직접 구성합니다.
"""

import pytest
import sys
from pathlib import Path

# 프로젝트 경로 추가
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.core.constants import FS, UM, thz_to_angular
from src.core.types import Chi2Denominator
from src.materials import (
    Chi2Mode,
    Chi2Model,
    ConstantIndex,
    PhononResonanceModel,
    SellmeierModel,
    load_tabulated_index,
    sellmeier_index,
)
from src.pulse import Gaussian, PulseSpectrum, Rectangular
from src.signal import ExperimentConfig

PRESET_DIR = project_root / "config" / "presets"
DATA_DIR = project_root / "config" / "data"


@pytest.fixture(scope="session")
def znte_sellmeier():
    """ZnTe Sellmeier 계수"""
    return SellmeierModel(A=4.27, B=3.01, C=0.142)


@pytest.fixture(scope="session")
def znte_phonon():
    """ZnTe 포논 공명 모델 (흡수 포함)"""
    return PhononResonanceModel(
        eps_inf=6.7,
        omega_to=thz_to_angular(5.31),
        omega_lo=thz_to_angular(6.18),
        gamma=thz_to_angular(0.09),
    )


@pytest.fixture(scope="session")
def riek_config(znte_sellmeier, znte_phonon):
    """7 µm ZnTe, 사각형 255 ± 37.5 THz 펄스, 흡수 무시"""
    lossless = PhononResonanceModel(
        eps_inf=znte_phonon.eps_inf,
        omega_to=znte_phonon.omega_to,
        omega_lo=znte_phonon.omega_lo,
        gamma=znte_phonon.gamma,
        absorption_enabled=False,
    )
    return ExperimentConfig(
        crystal_length=7.0 * UM,
        temperature=0.0,
        laser_index=znte_sellmeier,
        thz_index=lossless,
        chi2=Chi2Model(mode=Chi2Mode.CONSTANT, constant_value=1.17e-21),
        pulse=PulseSpectrum(Rectangular(thz_to_angular(255.0), thz_to_angular(75.0)), 1e8, 3.0 * UM),
        group_index_override=2.24,
    )


@pytest.fixture(scope="session")
def absorbing_riek_config(riek_config, znte_phonon):
    """riek 설정에 흡수 포논 모델"""
    return riek_config.with_thz_index(znte_phonon)


@pytest.fixture(scope="session")
def benea_config(znte_sellmeier):
    """3 mm ZnTe, 80 fs 가우시안 펄스, 표 굴절률, 분산 χ⁽²⁾"""
    pulse = PulseSpectrum(Gaussian(thz_to_angular(375.0), 80.0 * FS), 1e8, 125.0 * UM)
    n_ref = sellmeier_index(znte_sellmeier, pulse.omega_c)
    return ExperimentConfig(
        crystal_length=3000.0 * UM,
        temperature=300.0,
        laser_index=znte_sellmeier,
        thz_index=load_tabulated_index(DATA_DIR / "znte_thz_index.csv"),
        chi2=Chi2Model(
            mode=Chi2Mode.DISPERSIVE,
            r41=4e-12,
            c0=-0.07,
            omega_to=thz_to_angular(5.31),
            gamma=thz_to_angular(0.09),
            n_ref=n_ref,
            denominator=Chi2Denominator.RESONANT,
        ),
        pulse=pulse,
    )


@pytest.fixture
def constant_medium_config(znte_sellmeier):
    """주파수 무관 실수 굴절률 3.2 매질 (분산 없는 기준 실험)"""
    return ExperimentConfig(
        crystal_length=7.0 * UM,
        temperature=0.0,
        laser_index=znte_sellmeier,
        thz_index=ConstantIndex(3.2),
        chi2=Chi2Model(mode=Chi2Mode.CONSTANT, constant_value=1.17e-21),
        pulse=PulseSpectrum(Rectangular(thz_to_angular(255.0), thz_to_angular(75.0)), 1e8, 3.0 * UM),
        group_index_override=2.24,
    )


@pytest.fixture(scope="session")
def preset_dir():
    """프리셋 디렉터리"""
    return PRESET_DIR


@pytest.fixture(scope="session")
def data_dir():
    """데이터 디렉터리"""
    return DATA_DIR


def pytest_configure(config):
    """pytest 설정"""
    # 사용자 정의 마커 등록
    config.addinivalue_line(
        "markers", "slow: marks tests as slow running"
    )
    config.addinivalue_line(
        "markers", "integration: marks tests as integration tests"
    )
    config.addinivalue_line(
        "markers", "unit: marks tests as unit tests"
    )


def pytest_collection_modifyitems(config, items):
    """테스트 수집 후 수정"""
    for item in items:
        # integration 디렉터리의 테스트는 자동으로 integration 표시
        if "integration" in str(item.fspath):
            item.add_marker(pytest.mark.integration)
        else:
            item.add_marker(pytest.mark.unit)

        # 느린 테스트 자동 표시
        if "integration" in item.keywords or "slow" in item.keywords:
            item.add_marker(pytest.mark.slow)


@pytest.fixture(autouse=True)
def setup_test_environment(monkeypatch):
    """테스트 환경 설정 (모든 테스트에 자동 적용)"""
    original_path = sys.path.copy()
    # 사용자 환경의 .env 값이 테스트에 섞이지 않도록
    monkeypatch.delenv("EOS_VACUUM_PRESET_DIR", raising=False)
    monkeypatch.delenv("EOS_VACUUM_DATA_DIR", raising=False)

    yield

    # 테스트 종료 후 정리
    sys.path = original_path


def pytest_report_header(config):
    """테스트 보고서 헤더"""
    return [
        "EOS Vacuum Sampling Tests",
        "================================",
        f"Python version: {sys.version}",
        f"Platform: {sys.platform}",
    ]
