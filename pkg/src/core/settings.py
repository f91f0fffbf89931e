"""
Settings - 프로세스 수준 환경 설정

EOS_VACUUM_ 접두사 환경 변수와 선택적 .env 파일에서 로그 레벨,
기본 스레드 수, 프리셋 디렉터리를 읽습니다.
"""

import os
from pathlib import Path
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from .constants import ENV_PREFIX

PROJECT_ROOT = Path(__file__).resolve().parent.parent.parent
DEFAULT_PRESET_DIR = PROJECT_ROOT / "config" / "presets"
DEFAULT_DATA_DIR = PROJECT_ROOT / "config" / "data"


class AppSettings(BaseSettings):
    """환경 설정"""

    model_config = SettingsConfigDict(
        env_prefix=ENV_PREFIX,
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    log_level: str = "INFO"
    threads: Optional[int] = Field(default=None, ge=1)
    preset_dir: Path = DEFAULT_PRESET_DIR
    data_dir: Path = DEFAULT_DATA_DIR

    @field_validator("log_level")
    @classmethod
    def _upper_level(cls, value: str) -> str:
        level = value.upper()
        if level not in {"TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Unknown log level: {value}")
        return level

    def resolved_threads(self) -> int:
        """스레드 수 (미설정 시 하드웨어 병렬도)"""
        return self.threads or os.cpu_count() or 1


def get_settings() -> AppSettings:
    """현재 환경으로 설정 생성"""
    return AppSettings()
