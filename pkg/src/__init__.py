"""
Source Package - 메인 소스 코드

core, numerics, materials, pulse, greens, signal, scan, cli 하위 패키지로 구성됩니다.
"""

from .core import __version__

__all__ = ["__version__"]
