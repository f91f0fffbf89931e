"""
Scan Ingest - 실험 지연 스캔 파일 읽기

형식: 쉼표 구분 텍스트, 헤더 `delay_fs,s2`, 지연은 fs, `#` 주석 줄 허용.
0 을 중심으로 대칭인 구간으로 자르고, 격자가 0 을 포함하는 균일 격자가 아니면
최소 간격 격자로 선형 보간합니다. 두 처리는 flags 에 기록됩니다.
"""

import math
from pathlib import Path
from typing import Union

import numpy as np
import pandas as pd
from loguru import logger

from ..core.constants import FS, SCAN_HEADER
from ..core.exceptions import FormatError, NonMonotoneDelays
from .delay_scan import UNIFORM_RTOL, DelayScan, symmetric_delays


def read_scan_frame(path: Union[str, Path]) -> pd.DataFrame:
    """헤더와 수치 형식을 검증한 원시 표"""
    path = Path(path)
    try:
        frame = pd.read_csv(path, comment="#", skipinitialspace=True)
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise FormatError(str(path), str(e))
    if [str(c).strip() for c in frame.columns] != SCAN_HEADER:
        raise FormatError(str(path), f"expected header {','.join(SCAN_HEADER)}")
    frame.columns = SCAN_HEADER
    if len(frame) < 3:
        raise FormatError(str(path), "need at least three rows")
    try:
        frame = frame.astype(float)
    except ValueError as e:
        raise FormatError(str(path), f"non-numeric value ({e})")
    if not np.all(np.isfinite(frame.to_numpy())):
        raise FormatError(str(path), "non-finite value")
    return frame


def _is_centered_lattice(delays: np.ndarray) -> bool:
    steps = np.diff(delays)
    step = float(steps.mean())
    if np.max(np.abs(steps - step)) > UNIFORM_RTOL * step or delays.size % 2 == 0:
        return False
    return abs(delays[delays.size // 2]) <= UNIFORM_RTOL * step


def ingest_experimental_scan(path: Union[str, Path]) -> DelayScan:
    """
    실험 지연 스캔 파일을 DelayScan 으로 변환

    Args:
        path: CSV 파일 경로

    Returns:
        DelayScan (flags: cropped, resampled)

    Raises:
        FormatError: 헤더/수치 형식 오류 또는 0 을 포함하지 않는 지연 범위
        NonMonotoneDelays: 지연이 엄격히 증가하지 않음
    """
    frame = read_scan_frame(path)
    delays = frame["delay_fs"].to_numpy() * FS
    values = frame["s2"].to_numpy()

    bad = np.nonzero(np.diff(delays) <= 0)[0]
    if bad.size:
        raise NonMonotoneDelays(int(bad[0]) + 1)

    half_span = min(-delays[0], delays[-1])
    if half_span <= 0:
        raise FormatError(str(path), "delay range does not straddle zero")

    keep = np.abs(delays) <= half_span * (1.0 + UNIFORM_RTOL)
    cropped = not bool(np.all(keep))
    delays, values = delays[keep], values[keep]

    resampled = not _is_centered_lattice(delays)
    if resampled:
        step = float(np.min(np.diff(delays)))
        half_points = int(math.floor(half_span / step * (1.0 + UNIFORM_RTOL)))
        if half_points < 1:
            raise FormatError(str(path), "delay step exceeds the symmetric range")
        lattice = symmetric_delays(step, half_points)
        values = np.interp(lattice, delays, values)
        delays = lattice
        logger.warning(f"{path}: non-uniform or off-centre delays resampled onto {delays.size} points "
                       f"(step {step / FS:.3g} fs)")
    if cropped:
        logger.warning(f"{path}: delays cropped to the symmetric range +/-{half_span / FS:.3g} fs")

    logger.info(f"Ingested {delays.size} delays from {path}")
    return DelayScan(delays, values, flags={"cropped": cropped, "resampled": resampled})
