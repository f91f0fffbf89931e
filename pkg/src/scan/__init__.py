"""
Scan - 지연 스캔 합성, 푸리에 역변환, 실험 스캔 읽기
"""

from .delay_scan import (
    DelayScan,
    edge_ratio,
    roundtrip_residual,
    spectrum_from_delay_scan,
    symmetric_delays,
    synthesize_delay_scan,
    taper,
)
from .ingest import ingest_experimental_scan, read_scan_frame

__all__ = [
    "DelayScan",
    "edge_ratio",
    "roundtrip_residual",
    "spectrum_from_delay_scan",
    "symmetric_delays",
    "synthesize_delay_scan",
    "taper",
    "ingest_experimental_scan",
    "read_scan_frame",
]
