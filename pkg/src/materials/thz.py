"""
THz Index Providers - THz 대역 굴절률 공급자 보조

흡수 스케일 래퍼와 공급자 공통 유전율 함수입니다.
"""

from dataclasses import dataclass

from ..core.interfaces import IRefractiveIndex


@dataclass(frozen=True)
class ScaledAbsorptionIndex(IRefractiveIndex):
    """Im n 만 factor배 하는 래퍼 (무손실 극한 검토용)"""
    base: IRefractiveIndex
    factor: float

    def __post_init__(self):
        """데이터 검증"""
        if self.factor < 0:
            raise ValueError("Absorption scale must be non-negative")

    def index(self, omega: float) -> complex:
        n = self.base.index(omega)
        return complex(n.real, self.factor * n.imag)

    def permittivity(self, omega: float) -> complex:
        n = self.index(omega)
        return n * n

    @property
    def is_lossless(self) -> bool:
        return self.factor == 0 or self.base.is_lossless


@dataclass(frozen=True)
class ConstantIndex(IRefractiveIndex):
    """주파수 무관 복소 굴절률"""
    n: complex

    def __post_init__(self):
        """데이터 검증"""
        n = complex(self.n)
        if n.real <= 0 or n.imag < 0:
            raise ValueError("Constant index needs Re n > 0 and Im n >= 0")
        object.__setattr__(self, "n", n)

    def index(self, omega: float) -> complex:
        return self.n

    @property
    def is_lossless(self) -> bool:
        return self.n.imag == 0


def thz_permittivity(index: IRefractiveIndex, omega: float) -> complex:
    """공급자의 유전율 ε(Ω)"""
    return index.permittivity(omega)
