"""
Tabulated Index - 표 THz 굴절률 (CSV)

동봉된 znte_thz_index.csv 는 감쇠 단일 진동자 모델로 만든 합성 표이며 측정값이 아닙니다.

n_re와 흡수 계수 α를 선형 보간하고 Im n = α·c/Ω 로 변환합니다.
표 범위 밖 조회는 외삽하지 않고 OutOfTableRange를 발생시킵니다.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

import numpy as np
import pandas as pd
from loguru import logger

from ..core.constants import SPEED_OF_LIGHT, TABLE_INDEX_HEADER, thz_to_angular
from ..core.exceptions import FormatError, OutOfTableRange
from ..core.interfaces import IRefractiveIndex


@dataclass(frozen=True, eq=False)
class TabulatedIndex(IRefractiveIndex):
    """(Ω [rad/s], n_re, α [1/m]) 표본"""
    omegas: np.ndarray
    n_re: np.ndarray
    alpha: np.ndarray
    source: str = field(default="", compare=False)

    def __post_init__(self):
        """데이터 검증"""
        omegas = np.asarray(self.omegas, dtype=float)
        n_re = np.asarray(self.n_re, dtype=float)
        alpha = np.asarray(self.alpha, dtype=float)
        if not (omegas.ndim == n_re.ndim == alpha.ndim == 1):
            raise ValueError("Table columns must be one-dimensional")
        if not (omegas.size == n_re.size == alpha.size):
            raise ValueError("Table columns must have equal length")
        if omegas.size < 2:
            raise ValueError("Table needs at least two samples")
        if omegas[0] <= 0 or np.any(np.diff(omegas) <= 0):
            raise ValueError("Table frequencies must be positive and strictly increasing")
        if np.any(n_re <= 0):
            raise ValueError("Table n_re must be positive")
        if np.any(alpha < 0):
            raise ValueError("Table alpha must be non-negative")
        for name, arr in (("omegas", omegas), ("n_re", n_re), ("alpha", alpha)):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def omega_min(self) -> float:
        return float(self.omegas[0])

    @property
    def omega_max(self) -> float:
        return float(self.omegas[-1])

    def index(self, omega: float) -> complex:
        return tabulated_index(self, omega)

    @property
    def is_lossless(self) -> bool:
        return not bool(np.any(self.alpha > 0))


def tabulated_index(tab: TabulatedIndex, omega: float) -> complex:
    """
    표 보간 복소 굴절률

    Args:
        tab: 굴절률 표
        omega: 각주파수 (rad/s)

    Returns:
        n_re + i·α·c/Ω

    Raises:
        OutOfTableRange: 표 범위 밖
    """
    if not tab.omega_min <= omega <= tab.omega_max:
        raise OutOfTableRange(omega, tab.omega_min, tab.omega_max)
    n_re = float(np.interp(omega, tab.omegas, tab.n_re))
    alpha = float(np.interp(omega, tab.omegas, tab.alpha))
    return complex(n_re, alpha * SPEED_OF_LIGHT / omega)


def load_tabulated_index(path: Union[str, Path]) -> TabulatedIndex:
    """CSV(freq_thz,n_re,alpha_per_m) 파일에서 표 로드"""
    path = Path(path)
    try:
        frame = pd.read_csv(path, comment="#", skipinitialspace=True)
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise FormatError(str(path), str(e))
    if list(frame.columns) != TABLE_INDEX_HEADER:
        raise FormatError(str(path), f"expected header {','.join(TABLE_INDEX_HEADER)}")
    try:
        table = TabulatedIndex(
            omegas=np.array([thz_to_angular(f) for f in frame["freq_thz"].to_numpy(float)]),
            n_re=frame["n_re"].to_numpy(float),
            alpha=frame["alpha_per_m"].to_numpy(float),
            source=str(path),
        )
    except ValueError as e:
        raise FormatError(str(path), str(e))
    logger.debug(f"Loaded THz index table {path} with {table.omegas.size} samples")
    return table
