"""
Greens - 균질 결정의 다이애딕 그린 텐서와 종/횡 분해
"""

from .bulk import bulk_green_tensor, bulk_green_xx, im_bulk_green_xx, separation
from .decomposition import curl_residual, divergence_residual, longitudinal_green, transverse_green
from .medium import BulkMedium, WeylKernelPoint, branch_kz

__all__ = [
    "bulk_green_tensor",
    "bulk_green_xx",
    "im_bulk_green_xx",
    "separation",
    "curl_residual",
    "divergence_residual",
    "longitudinal_green",
    "transverse_green",
    "BulkMedium",
    "WeylKernelPoint",
    "branch_kz",
]
