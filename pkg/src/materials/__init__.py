"""
Materials - 비선형 결정의 광학 응답

Sellmeier 레이저 대역 굴절률, THz 포논 공명/표 굴절률, χ⁽²⁾ 분산, 열적 점유수.
"""

from .chi2 import Chi2Mode, Chi2Model, chi2_disp
from .phonon import PhononResonanceModel, permittivity, phonon_index
from .sellmeier import SellmeierModel, group_index, sellmeier_index, sellmeier_index_array
from .tabulated import TabulatedIndex, load_tabulated_index, tabulated_index
from .thermal import thermal_occupation
from .thz import ConstantIndex, ScaledAbsorptionIndex, thz_permittivity

__all__ = [
    "Chi2Mode",
    "Chi2Model",
    "chi2_disp",
    "PhononResonanceModel",
    "permittivity",
    "phonon_index",
    "SellmeierModel",
    "group_index",
    "sellmeier_index",
    "sellmeier_index_array",
    "TabulatedIndex",
    "load_tabulated_index",
    "tabulated_index",
    "thermal_occupation",
    "ConstantIndex",
    "ScaledAbsorptionIndex",
    "thz_permittivity",
]
