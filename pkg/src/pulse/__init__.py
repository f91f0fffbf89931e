"""
Pulse - 프로브 펄스 스펙트럼과 범함수
"""

from .functionals import (
    detected_energy,
    mean_detected_frequency,
    photon_number,
    photon_number_scale,
    spectral_autocorrelation,
)
from .spectrum import (
    Gaussian,
    PulseSpectrum,
    Rectangular,
    TabulatedPulse,
    amplitude,
    load_tabulated_pulse,
    product_support,
    support,
    with_duration,
)

__all__ = [
    "detected_energy",
    "mean_detected_frequency",
    "photon_number",
    "photon_number_scale",
    "spectral_autocorrelation",
    "Gaussian",
    "PulseSpectrum",
    "Rectangular",
    "TabulatedPulse",
    "amplitude",
    "load_tabulated_pulse",
    "product_support",
    "support",
    "with_duration",
]
