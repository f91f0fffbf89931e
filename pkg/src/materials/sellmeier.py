"""
Sellmeier Model - 레이저 대역 굴절률

n(λ)² = A + Bλ²/(λ² − C) (λ는 µm) 와 해석적 군굴절률 n_g = n − λ dn/dλ.
"""

import math
from dataclasses import dataclass

import numpy as np

from ..core.constants import SPEED_OF_LIGHT, TWO_PI, UM, wavelength_um
from ..core.exceptions import NonpositiveFrequency, PoleCrossing


@dataclass(frozen=True)
class SellmeierModel:
    """Sellmeier 계수 (C는 µm²)"""
    A: float
    B: float
    C: float

    def __post_init__(self):
        """데이터 검증"""
        if self.A <= 0:
            raise ValueError("Sellmeier A must be positive")
        if self.B < 0:
            raise ValueError("Sellmeier B must be non-negative")
        if self.C <= 0:
            raise ValueError("Sellmeier C must be positive")


def _lambda_squared(model: SellmeierModel, omega: float) -> float:
    if not omega > 0:
        raise NonpositiveFrequency(omega, "sellmeier_index")
    lam = wavelength_um(omega)
    lam2 = lam * lam
    if lam2 <= model.C:
        raise PoleCrossing(lam, model.C)
    return lam2


def sellmeier_index(model: SellmeierModel, omega: float) -> float:
    """
    Sellmeier 굴절률

    Args:
        model: Sellmeier 계수
        omega: 각주파수 (rad/s)

    Returns:
        실수 굴절률

    Raises:
        NonpositiveFrequency: omega ≤ 0
        PoleCrossing: λ² ≤ C
    """
    lam2 = _lambda_squared(model, omega)
    return math.sqrt(model.A + model.B * lam2 / (lam2 - model.C))


def group_index(model: SellmeierModel, omega: float) -> float:
    """군굴절률 n + BCλ²/(n(λ² − C)²)"""
    lam2 = _lambda_squared(model, omega)
    n = math.sqrt(model.A + model.B * lam2 / (lam2 - model.C))
    return n + model.B * model.C * lam2 / (n * (lam2 - model.C) ** 2)


def sellmeier_index_array(model: SellmeierModel, omegas: np.ndarray) -> np.ndarray:
    """배열 입력 Sellmeier 굴절률 (적분 노드용)"""
    omegas = np.asarray(omegas, dtype=float)
    if np.any(omegas <= 0):
        raise NonpositiveFrequency(float(np.min(omegas)), "sellmeier_index_array")
    lam2 = (TWO_PI * SPEED_OF_LIGHT / omegas / UM) ** 2
    if np.any(lam2 <= model.C):
        raise PoleCrossing(float(np.sqrt(np.min(lam2))), model.C)
    return np.sqrt(model.A + model.B * lam2 / (lam2 - model.C))
