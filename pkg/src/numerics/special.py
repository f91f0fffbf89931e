"""
Special Functions - 특수 함수

작은 인자에서 급수로 전환하는 sinc와, 정의 Γ(z) = ∫_z^∞ e^{-t}/t dt 의
상부 불완전 감마 함수(지수 적분 E1)를 제공합니다. E1은 z ≤ 1 에서 급수,
z > 1 에서 수정 Lentz 연분수로 계산합니다.
"""

import math
from typing import Union

import numpy as np

from ..core.constants import EULER_GAMMA, GAMMA_SERIES_CROSSOVER, SINC_SERIES_THRESHOLD
from ..core.exceptions import DomainError, NonConvergence

ArrayLike = Union[float, complex, np.ndarray]

_MAX_ITERATIONS = 500
_EPS = 1e-16
_TINY = 1e-300


def sinc(x: ArrayLike) -> ArrayLike:
    """sin(x)/x (|x| < 1e-4 에서 급수 1 - x²/6 + x⁴/120)"""
    arr = np.asarray(x)
    small = np.abs(arr) < SINC_SERIES_THRESHOLD
    x2 = arr * arr
    series = 1.0 - x2 / 6.0 + x2 * x2 / 120.0
    safe = np.where(small, 1.0, arr)
    direct = np.sin(safe) / safe
    result = np.where(small, series, direct)
    if np.ndim(x) == 0:
        return result.item()
    return result


def _e1_series(z: float) -> float:
    # E1(z) = -γ - ln z + Σ (-1)^{k+1} z^k / (k·k!)
    total = 0.0
    term = 1.0
    for k in range(1, _MAX_ITERATIONS):
        term *= -z / k
        delta = -term / k
        total += delta
        if abs(delta) < _EPS * abs(total):
            return -EULER_GAMMA - math.log(z) + total
    raise NonConvergence(total, abs(delta), "E1 series")


def _e1_scaled_continued_fraction(z: float) -> float:
    # e^z E1(z), 수정 Lentz
    b = z + 1.0
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITERATIONS):
        an = -float(i * i)
        b += 2.0
        d = 1.0 / (an * d + b)
        c = b + an / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < _EPS:
            return h
    raise NonConvergence(h, abs(delta - 1.0), "E1 continued fraction")


def upper_incomplete_gamma0(z: float) -> float:
    """
    상부 불완전 감마 함수 Γ(0, z) = E1(z)

    Args:
        z: 양의 실수 인자

    Returns:
        ∫_z^∞ e^{-t}/t dt

    Raises:
        DomainError: z ≤ 0
    """
    if not z > 0:
        raise DomainError("upper_incomplete_gamma0", z)
    if z <= GAMMA_SERIES_CROSSOVER:
        return _e1_series(z)
    return math.exp(-z) * _e1_scaled_continued_fraction(z)


def scaled_incomplete_gamma0(z: float) -> float:
    """e^z·Γ(0, z) (큰 z 에서 넘침 없이)"""
    if not z > 0:
        raise DomainError("scaled_incomplete_gamma0", z)
    if z <= GAMMA_SERIES_CROSSOVER:
        return math.exp(z) * _e1_series(z)
    return _e1_scaled_continued_fraction(z)
