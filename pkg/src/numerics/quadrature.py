"""
Quadrature - 적분 엔진

scipy.integrate.quad 기반 1차원 적응 적분(복소 피적분 함수는 실수부/허수부 분리),
사각형/원판 영역 중첩 2차원 적분, 가우스-르장드르 노드, 사다리꼴 가중치를 제공합니다.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Sequence, Tuple, Union

import numpy as np
from loguru import logger
from scipy import integrate

from ..core.exceptions import NonConvergence, QuadratureFailure
from ..core.types import QuadratureSpec, QuadResult

DEFAULT_SPEC = QuadratureSpec()


@dataclass(frozen=True)
class Rectangle:
    """사각형 영역 [x0, x1] × [y0, y1]"""
    x0: float
    x1: float
    y0: float
    y1: float

    def __post_init__(self):
        """데이터 검증"""
        if not (self.x1 > self.x0 and self.y1 > self.y0):
            raise ValueError("Rectangle bounds must be increasing")


@dataclass(frozen=True)
class Disc:
    """원점 중심 원판 (radius = inf 이면 전체 평면), 극좌표로 적분"""
    radius: float
    center: Tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        """데이터 검증"""
        if not self.radius > 0:
            raise ValueError("Disc radius must be positive")


Region = Union[Rectangle, Disc]


def _quad_real(
    func: Callable[[float], float],
    a: float,
    b: float,
    spec: QuadratureSpec,
    points: Optional[Sequence[float]],
) -> Tuple[float, float, int]:
    """실수 피적분 함수 적분 (값, 오차, ier)"""
    kwargs = dict(
        epsabs=spec.abs_tol,
        epsrel=spec.rel_tol,
        limit=spec.max_subdivisions,
        full_output=1,
    )
    inner_points = None
    if points is not None and math.isfinite(b):
        inner_points = sorted(p for p in points if a < p < b) or None
    # full_output 이면 quad는 경고 대신 메시지를 반환
    if inner_points:
        result = integrate.quad(func, a, b, points=inner_points, **kwargs)
    else:
        result = integrate.quad(func, a, b, **kwargs)
    value, error = float(result[0]), float(result[1])
    ier = 0 if len(result) == 3 else 1
    return value, error, ier


def _accepts(value: complex, error: float, spec: QuadratureSpec) -> bool:
    return error <= max(spec.abs_tol, spec.rel_tol * abs(value)) * 10.0


def integrate_1d(
    f: Callable[[float], complex],
    a: float,
    b: float,
    spec: Optional[QuadratureSpec] = None,
    points: Optional[Sequence[float]] = None,
    real: bool = False,
) -> QuadResult:
    """
    1차원 적응 적분

    Args:
        f: 피적분 함수 (실수 → 복소수)
        a: 하한
        b: 상한 (+inf 허용)
        spec: 허용 오차 사양
        points: 내부 분할점 (가지점, 불연속점)
        real: 피적분 함수가 실수임이 알려진 경우 허수부 적분 생략

    Returns:
        적분값과 오차 추정

    Raises:
        NonConvergence: 허용 오차 미달성
        QuadratureFailure: 비유한 결과
    """
    spec = spec or DEFAULT_SPEC
    if b == a:
        return QuadResult(0.0, 0.0)

    # 반무한 구간은 마지막 분할점에서 유한/무한 구간으로 나눔
    if not math.isfinite(b) and points:
        split = max(p for p in points)
        if split > a:
            head = integrate_1d(f, a, split, spec, points, real)
            tail = integrate_1d(f, split, b, spec, None, real)
            return QuadResult(head.value + tail.value, head.error + tail.error)

    parts = [lambda x: float(np.real(f(x)))]
    if not real:
        parts.append(lambda x: float(np.imag(f(x))))

    values = []
    total_error = 0.0
    failed = False
    for part in parts:
        value, error, ier = _quad_real(part, a, b, spec, points)
        values.append(value)
        total_error += error
        failed = failed or ier != 0

    result = complex(values[0], values[1] if len(values) > 1 else 0.0)
    if not (math.isfinite(result.real) and math.isfinite(result.imag) and math.isfinite(total_error)):
        raise QuadratureFailure("non-finite result", {"a": a, "b": b})
    if failed:
        if not _accepts(result, total_error, spec):
            raise NonConvergence(result, total_error, f"interval [{a:.4g}, {b:.4g}]")
        logger.debug(f"quad flagged [{a:.4g}, {b:.4g}] but error {total_error:.3g} is within tolerance")
    return QuadResult(result, total_error)


def integrate_2d_nested(
    f: Callable[[float, float], complex],
    region: Region,
    spec: Optional[QuadratureSpec] = None,
    real: bool = False,
) -> QuadResult:
    """
    중첩 2차원 적분 (내부 단계는 허용 오차를 10배 강화)

    Args:
        f: 피적분 함수 f(x, y)
        region: Rectangle 또는 Disc (Disc는 극좌표 r dr dφ)
        spec: 외부 단계 허용 오차
        real: 실수 피적분 함수 여부

    Returns:
        적분값과 오차 추정
    """
    spec = spec or DEFAULT_SPEC
    inner_spec = spec.tightened()
    inner_errors = []

    if isinstance(region, Rectangle):
        def outer(x: float) -> complex:
            inner = integrate_1d(lambda y: f(x, y), region.y0, region.y1, inner_spec, real=real)
            inner_errors.append(inner.error)
            return inner.value

        result = integrate_1d(outer, region.x0, region.x1, spec, real=real)
        span = region.x1 - region.x0
    else:
        cx, cy = region.center

        def outer(r: float) -> complex:
            inner = integrate_1d(
                lambda phi: f(cx + r * math.cos(phi), cy + r * math.sin(phi)),
                0.0, 2.0 * math.pi, inner_spec, real=real,
            )
            inner_errors.append(inner.error)
            return r * inner.value

        result = integrate_1d(outer, 0.0, region.radius, spec, real=real)
        span = region.radius if math.isfinite(region.radius) else 1.0

    propagated = max(inner_errors, default=0.0) * span
    return QuadResult(result.value, result.error + propagated)


@lru_cache(maxsize=64)
def _leggauss(order: int) -> Tuple[np.ndarray, np.ndarray]:
    nodes, weights = np.polynomial.legendre.leggauss(order)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def gauss_legendre(a: float, b: float, order: int) -> Tuple[np.ndarray, np.ndarray]:
    """[a, b] 구간 가우스-르장드르 노드와 가중치"""
    nodes, weights = _leggauss(order)
    half = 0.5 * (b - a)
    return a + half * (nodes + 1.0), half * weights


def trapezoid_weights(x: np.ndarray) -> np.ndarray:
    """비균일 격자 사다리꼴 가중치 (Σ w·y ≈ ∫ y dx)"""
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.size < 2:
        raise ValueError("Trapezoid weights need at least two grid points")
    dx = np.diff(x)
    weights = np.zeros_like(x)
    weights[:-1] += 0.5 * dx
    weights[1:] += 0.5 * dx
    return weights


def trapezoid(y: np.ndarray, x: np.ndarray) -> float:
    """사다리꼴 적분"""
    return float(np.dot(trapezoid_weights(x), np.asarray(y, dtype=float)))


def integrate_vector(
    f: Callable[[float], np.ndarray],
    a: float,
    b: float,
    spec: Optional[QuadratureSpec] = None,
) -> Tuple[np.ndarray, float]:
    """
    배열 값 피적분 함수 적응 적분 (scipy quad_vec, 최대 노름)

    복소 배열은 실수부/허수부를 이어 붙여 적분한 뒤 다시 조립합니다.

    Args:
        f: 피적분 함수 (실수 → 복소 배열)
        a: 하한
        b: 상한 (+inf 허용)
        spec: 허용 오차 사양

    Returns:
        (적분 배열, 오차 추정)
    """
    spec = spec or DEFAULT_SPEC
    shape = np.shape(f(a if math.isfinite(a) else 0.0))

    def packed(x: float) -> np.ndarray:
        v = np.asarray(f(x), dtype=complex).ravel()
        return np.concatenate([v.real, v.imag])

    res, err, info = integrate.quad_vec(
        packed, a, b,
        epsabs=spec.abs_tol,
        epsrel=spec.rel_tol,
        limit=spec.max_subdivisions,
        norm="max",
        full_output=True,
    )
    half = res.size // 2
    value = (res[:half] + 1j * res[half:]).reshape(shape)
    if not (np.all(np.isfinite(res)) and math.isfinite(err)):
        raise QuadratureFailure("non-finite vector result", {"a": a, "b": b})
    if not info.success:
        scale = float(np.max(np.abs(res))) if res.size else 0.0
        if err > max(spec.abs_tol, spec.rel_tol * scale) * 10.0:
            raise NonConvergence(complex(value.ravel()[0]), float(err), f"vector interval [{a:.4g}, {b:.4g}]")
        logger.debug(f"quad_vec flagged [{a:.4g}, {b:.4g}] but error {err:.3g} is within tolerance")
    return value, float(err)
