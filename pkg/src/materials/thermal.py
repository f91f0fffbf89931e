"""
Thermal Occupation - 보즈-아인슈타인 점유수
"""

import math

from ..core.constants import BOLTZMANN, HBAR
from ..core.exceptions import NonpositiveFrequency


def thermal_occupation(omega: float, temperature: float) -> float:
    """
    열적 광자 점유수 n_T = 1/(exp(ħΩ/k_BT) − 1)

    Args:
        omega: 각주파수 (rad/s)
        temperature: 온도 (K), 0이면 0 반환

    Returns:
        무차원 점유수
    """
    if not omega > 0:
        raise NonpositiveFrequency(omega, "thermal_occupation")
    if temperature < 0:
        raise ValueError("Temperature must be non-negative")
    if temperature == 0:
        return 0.0
    x = HBAR * omega / (BOLTZMANN * temperature)
    if x > 700.0:
        return math.exp(-x)
    return 1.0 / math.expm1(x)
