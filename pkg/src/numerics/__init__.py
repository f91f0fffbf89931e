"""
Numerics - 적분 엔진과 특수 함수
"""

from .quadrature import (
    Disc,
    Rectangle,
    gauss_legendre,
    integrate_1d,
    integrate_2d_nested,
    integrate_vector,
    trapezoid,
    trapezoid_weights,
)
from .special import scaled_incomplete_gamma0, sinc, upper_incomplete_gamma0

__all__ = [
    "Disc",
    "Rectangle",
    "gauss_legendre",
    "integrate_1d",
    "integrate_2d_nested",
    "integrate_vector",
    "trapezoid",
    "trapezoid_weights",
    "sinc",
    "upper_incomplete_gamma0",
    "scaled_incomplete_gamma0",
]
