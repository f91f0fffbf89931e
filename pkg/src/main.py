"""
Main Entry Point - eos-vacuum 진입점

.env 를 읽어 환경 설정을 준비한 뒤 click 명령 그룹을 실행합니다.
"""

import sys
from pathlib import Path

from dotenv import load_dotenv

# 프로젝트 루트를 Python 경로에 추가
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.cli.commands import cli


def load_environment():
    """환경 변수 로드 (.env 가 없으면 현재 환경 그대로)"""
    env_file = project_root / ".env"
    if env_file.exists():
        load_dotenv(env_file)


def main():
    """메인 함수"""
    load_environment()
    cli()


if __name__ == "__main__":
    main()
