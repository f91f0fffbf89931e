"""
Logging Setup - 로깅 설정

loguru 기본 싱크를 제거하고 stderr 싱크 하나를 고정 형식으로 설치합니다.
계산 결과는 파일로만 나가므로 stdout에는 아무것도 기록하지 않습니다.
"""

import sys

from loguru import logger

LOG_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | "
    "<level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan> - "
    "<level>{message}</level>"
)


def setup_logging(log_level: str = "INFO"):
    """
    로깅 설정

    Args:
        log_level: 로그 레벨 (DEBUG, INFO, WARNING, ERROR)

    Returns:
        설정된 로거
    """
    logger.remove()
    logger.add(
        sys.stderr,
        level=log_level.upper(),
        format=LOG_FORMAT,
        colorize=sys.stderr.isatty(),
        backtrace=False,
        diagnose=False,
    )
    return logger
