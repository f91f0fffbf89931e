"""
CLI - eos-vacuum 명령행 프런트엔드

실행 설정 로드/병합, 값 객체 구성, 메타데이터가 붙은 CSV 출력, click 하위 명령.
"""

from .builders import build_delays, build_experiment, build_grid
from .commands import cli
from .config import RunConfig, load_run_config, parse_override
from .output import run_metadata, write_table

__all__ = [
    "build_delays",
    "build_experiment",
    "build_grid",
    "cli",
    "RunConfig",
    "load_run_config",
    "parse_override",
    "run_metadata",
    "write_table",
]
