"""
Bulk Medium - 균질 결정 매질과 Weyl 평면파 성분

BulkMedium 은 굴절률 공급자로부터 파수 k(ω) = n(ω)ω/c 를 제공하고,
WeylKernelPoint 는 (k_∥, k_z) 평면파 성분의 s/p 편광 벡터를 보관합니다.
"""

import cmath
from dataclasses import dataclass
from typing import Union

import numpy as np

from ..core.constants import SPEED_OF_LIGHT
from ..core.exceptions import BranchViolation, NonpositiveFrequency
from ..core.interfaces import IRefractiveIndex

# k_z 허수부 음수 허용 한계 (|k| 대비)
BRANCH_TOLERANCE = 1e-12


@dataclass(frozen=True)
class BulkMedium:
    """균질 등방 매질 (복소 굴절률 공급자)"""
    index: IRefractiveIndex

    def wavenumber(self, omega: float) -> complex:
        """k(ω) = n(ω)·ω/c (Im k ≥ 0)"""
        if omega <= 0:
            raise NonpositiveFrequency(omega, "bulk wavenumber")
        return complex(self.index.index(omega)) * omega / SPEED_OF_LIGHT

    def permittivity(self, omega: float) -> complex:
        return self.index.permittivity(omega)

    @property
    def is_lossless(self) -> bool:
        return self.index.is_lossless


def branch_kz(k: complex, k_par: Union[float, complex]) -> complex:
    """k_z = √(k² − k_∥²), Im k_z ≥ 0 가지"""
    k_z = cmath.sqrt(k * k - k_par * k_par)
    if k_z.imag < 0 or (k_z.imag == 0 and k_z.real < 0):
        k_z = -k_z
    return k_z


@dataclass(frozen=True, eq=False)
class WeylKernelPoint:
    """
    Weyl 분해의 평면파 성분

    k_z 는 스칼라 또는 (N,) 배열, 방위각 phis 는 (M,) 배열이며
    편광 벡터는 (N, M, 3) 형태로 저장됩니다.
    """
    k: complex
    k_z: np.ndarray
    k_par: np.ndarray
    e_s: np.ndarray
    e_p_plus: np.ndarray
    e_p_minus: np.ndarray

    def __post_init__(self):
        """데이터 검증"""
        k_z = np.atleast_1d(np.asarray(self.k_z, dtype=complex))
        if np.any(k_z.imag < -BRANCH_TOLERANCE * abs(self.k)):
            raise BranchViolation(complex(k_z[np.argmin(k_z.imag)]))

    @classmethod
    def build(cls, k: complex, k_z, phis: np.ndarray) -> "WeylKernelPoint":
        """
        k_z 와 방위각으로부터 평면파 성분 생성

        Args:
            k: 매질 파수
            k_z: 종방향 파수 (스칼라 또는 배열, Im ≥ 0)
            phis: 방위각 노드

        Returns:
            WeylKernelPoint
        """
        k = complex(k)
        k_z = np.atleast_1d(np.asarray(k_z, dtype=complex))[:, None]
        phis = np.asarray(phis, dtype=float)[None, :]
        k_par_mag = np.sqrt(k * k - k_z * k_z)
        cos, sin = np.cos(phis), np.sin(phis)
        shape = np.broadcast(k_z, phis).shape

        k_par = np.stack([np.broadcast_to(k_par_mag * cos, shape),
                          np.broadcast_to(k_par_mag * sin, shape)], axis=-1)
        # e_s = (k_y, −k_x, 0)/k_∥ 는 방위각에만 의존
        e_s = np.stack([np.broadcast_to(sin, shape),
                        np.broadcast_to(-cos, shape),
                        np.zeros(shape)], axis=-1).astype(complex)
        p_xy = np.stack([np.broadcast_to(cos * k_z, shape),
                         np.broadcast_to(sin * k_z, shape)], axis=-1) / k
        p_z = np.broadcast_to(k_par_mag / k, shape)[..., None]
        e_p_plus = np.concatenate([-p_xy, p_z], axis=-1)
        e_p_minus = np.concatenate([p_xy, p_z], axis=-1)
        return cls(k, k_z[:, 0], k_par, e_s, e_p_plus, e_p_minus)

    @classmethod
    def from_transverse(cls, k: complex, kx: float, ky: float) -> "WeylKernelPoint":
        """횡파수 (k_x, k_y) 로부터 단일 성분 생성"""
        k_par = float(np.hypot(kx, ky))
        phi = float(np.arctan2(ky, kx))
        return cls.build(k, branch_kz(complex(k), k_par), np.array([phi]))

    def dyad(self, sign: int = 1) -> np.ndarray:
        """Σ_σ e_σ± ⊗ e_σ± (N, M, 3, 3), 전치 공액 없음"""
        e_p = self.e_p_plus if sign >= 0 else self.e_p_minus
        return (self.e_s[..., :, None] * self.e_s[..., None, :]
                + e_p[..., :, None] * e_p[..., None, :])

    def mean_dyad(self, sign: int = 1) -> np.ndarray:
        """방위각 평균 편광 다이애드 (N, 3, 3), 균일 노드 사다리꼴"""
        return self.dyad(sign).mean(axis=1)
