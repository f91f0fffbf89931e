"""
Core Interfaces - 물질 응답 인터페이스 정의

THz 대역 굴절률 공급자(포논 모델, 표, 흡수 스케일 래퍼)가 따르는 인터페이스입니다.
"""

from abc import ABC, abstractmethod


class IRefractiveIndex(ABC):
    """복소 굴절률 공급자 인터페이스"""

    @abstractmethod
    def index(self, omega: float) -> complex:
        """각주파수 omega에서의 복소 굴절률 (Im n ≥ 0)"""
        pass

    def permittivity(self, omega: float) -> complex:
        """유전율 ε = n²"""
        n = self.index(omega)
        return n * n

    @property
    @abstractmethod
    def is_lossless(self) -> bool:
        """모든 주파수에서 Im n = 0 이 보장되는지 여부"""
        pass
