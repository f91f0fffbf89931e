"""
EOS Vacuum - Core Module

핵심 타입, 인터페이스, 예외, 상수, 로깅 설정을 정의하는 기초 모듈
"""

from .types import *
from .exceptions import *
from .interfaces import *

__version__ = "1.0.0"
__author__ = "EOS Vacuum Team"
