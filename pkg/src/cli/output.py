"""
Output - 메타데이터 머리말이 붙은 CSV 출력

각 파일은 `# key: value` 주석 블록(프리셋, 덮어쓰기, 허용 오차, 설계 플래그)
다음에 고정 형식(%.10e) 표를 기록합니다. 시각 정보는 기록하지 않으므로
같은 설정이면 출력이 바이트 단위로 같습니다.
"""

from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional

import pandas as pd
from loguru import logger

from ..core import __version__
from ..core.constants import DESIGN_FLAGS, FLOAT_FORMAT
from .config import RunConfig


def run_metadata(run: RunConfig, overrides: Iterable[str] = (), extra: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """출력 머리말에 기록할 항목"""
    q = run.quadrature
    metadata: Dict[str, Any] = {
        "version": __version__,
        "preset": run.scenario,
        "overrides": "; ".join(overrides) or "none",
        "quadrature": (f"rel_tol={q.rel_tol:g}, abs_tol={q.abs_tol:g}, "
                       f"max_subdivisions={q.max_subdivisions}, full_inner_rel_tol={q.full_inner_rel_tol:g}"),
        "chi2_denominator": run.chi2.denominator.value,
        "duration_mapping": run.sweep.mapping.value,
    }
    metadata.update({f"flag.{k}": v for k, v in DESIGN_FLAGS.items()})
    if extra:
        metadata.update(extra)
    return metadata


def metadata_lines(metadata: Dict[str, Any]) -> List[str]:
    return [f"# {key}: {value}" for key, value in metadata.items()]


def write_table(path: Path, frame: pd.DataFrame, metadata: Dict[str, Any]) -> Path:
    """
    머리말 + CSV 기록

    Args:
        path: 출력 파일
        frame: 표
        metadata: 머리말 항목

    Returns:
        기록한 경로
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        for line in metadata_lines(metadata):
            f.write(line + "\n")
        frame.to_csv(f, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    logger.info(f"Wrote {len(frame)} rows to {path}")
    return path
