"""
Core Exceptions - 계산 전반에서 사용되는 예외 정의

물질 모델, 수치 적분, 그린 텐서, 신호 계산, 지연 스캔, 설정 처리에서
발생할 수 있는 예외들을 정의합니다. CLI는 각 예외의 exit_code로 종료 코드를 결정합니다.
"""

import math
from typing import Optional, Any, Dict


# CLI 종료 코드
EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_CONVERGENCE = 3
EXIT_IO = 4


def _thz(omega: float) -> float:
    return omega / (2.0 * math.pi * 1e12)


class VacuumSamplingError(Exception):
    """모든 계산 예외의 기본 클래스"""

    exit_code: int = EXIT_CONFIG

    def __init__(self, message: str, error_code: Optional[str] = None, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.error_code = error_code or self.__class__.__name__
        self.details = details or {}

    def __str__(self) -> str:
        if self.details:
            return f"{self.message} (Code: {self.error_code}, Details: {self.details})"
        return f"{self.message} (Code: {self.error_code})"


# === 물질 모델 관련 예외 ===

class MaterialError(VacuumSamplingError):
    """물질 응답 모델 관련 예외"""
    pass


class NonpositiveFrequency(MaterialError):
    """0 이하 주파수에서 평가 시도"""

    def __init__(self, omega: float, where: str = ""):
        message = f"Frequency must be positive, got {omega!r} rad/s"
        if where:
            message = f"{message} in {where}"
        super().__init__(message, "NONPOSITIVE_FREQUENCY", {"omega": omega})


class PoleCrossing(MaterialError):
    """Sellmeier 극점(λ² ≤ C) 통과"""

    def __init__(self, wavelength_um: float, pole_um2: float):
        message = f"Sellmeier pole crossed: lambda^2={wavelength_um ** 2:.6g} um^2 <= C={pole_um2:.6g} um^2"
        super().__init__(message, "POLE_CROSSING", {
            "wavelength_um": wavelength_um,
            "pole_um2": pole_um2
        })


class DegenerateResonance(MaterialError):
    """감쇠 없는 공명 주파수에서 평가"""

    def __init__(self, omega: float):
        message = "Undamped phonon resonance evaluated exactly at omega_TO"
        super().__init__(message, "DEGENERATE_RESONANCE", {"omega": omega})


class OutOfTableRange(MaterialError):
    """표 범위 밖 조회 (외삽 금지)"""

    def __init__(self, omega: float, omega_min: float, omega_max: float):
        message = (
            f"Frequency {_thz(omega):.6g} THz outside table range "
            f"[{_thz(omega_min):.6g}, {_thz(omega_max):.6g}] THz"
        )
        super().__init__(message, "OUT_OF_TABLE_RANGE", {
            "omega": omega,
            "omega_min": omega_min,
            "omega_max": omega_max
        })


# === 수치 계산 관련 예외 ===

class NumericsError(VacuumSamplingError):
    """수치 적분 및 특수 함수 관련 예외"""
    exit_code = EXIT_CONVERGENCE


class QuadratureFailure(NumericsError):
    """적분기 자체의 실패 (비유한 값 등)"""

    def __init__(self, reason: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(f"Quadrature failed: {reason}", "QUADRATURE_FAILURE", details)


class NonConvergence(NumericsError):
    """허용 오차 미달성, 최선 추정치와 오차 포함"""

    def __init__(self, estimate: complex, error: float, reason: str = ""):
        message = f"Quadrature did not converge (estimate={estimate!r}, error={error:.3g})"
        if reason:
            message = f"{message}: {reason}"
        super().__init__(message, "NON_CONVERGENCE", {"estimate": estimate, "error": error})
        self.estimate = estimate
        self.error = error


class DomainError(NumericsError):
    """특수 함수 정의역 밖 인자"""
    exit_code = EXIT_CONFIG

    def __init__(self, function: str, argument: float):
        message = f"{function} is undefined for argument {argument!r}"
        super().__init__(message, "DOMAIN_ERROR", {"function": function, "argument": argument})


# === 그린 텐서 관련 예외 ===

class GreensError(VacuumSamplingError):
    """그린 텐서 계산 관련 예외"""
    exit_code = EXIT_CONVERGENCE


class BranchViolation(GreensError):
    """Im k_z < 0 인 가지 위반"""

    def __init__(self, k_z: complex):
        message = f"Branch violation: Im k_z = {k_z.imag:.6g} < 0"
        super().__init__(message, "BRANCH_VIOLATION", {"k_z": k_z})


class CoincidenceRequest(GreensError):
    """일치점(z = z') 점별 값 요청"""
    exit_code = EXIT_CONFIG

    def __init__(self, quantity: str):
        message = f"Pointwise {quantity} requested at coincident planes (z = z')"
        super().__init__(message, "COINCIDENCE_REQUEST", {"quantity": quantity})


# === 신호 계산 관련 예외 ===

class SignalError(VacuumSamplingError):
    """신호 스펙트럼 계산 관련 예외"""
    pass


class AbsorptiveMediumUnsupported(SignalError):
    """무손실 전용 근사에 흡수 매질 입력"""

    def __init__(self, component: str, imag_index: float):
        message = f"Component '{component}' requires a lossless THz index (Im n = {imag_index:.3g})"
        super().__init__(message, "ABSORPTIVE_MEDIUM_UNSUPPORTED", {
            "component": component,
            "imag_index": imag_index
        })


class GridTooCoarse(SignalError):
    """격자 절반화 시 적분값 변화가 허용 오차 초과"""
    exit_code = EXIT_CONVERGENCE

    def __init__(self, full: float, halved: float, rel_tol: float):
        message = f"Omega grid too coarse: halving changes the variance from {full:.6g} to {halved:.6g}"
        super().__init__(message, "GRID_TOO_COARSE", {
            "full": full,
            "halved": halved,
            "rel_tol": rel_tol
        })


# === 지연 스캔 관련 예외 ===

class ScanError(VacuumSamplingError):
    """지연 스캔 관련 예외"""
    pass


class UnderresolvedSpectrum(ScanError):
    """cos(Ω δt) 진동을 분해하지 못하는 스펙트럼 격자"""
    exit_code = EXIT_CONVERGENCE

    def __init__(self, max_step: float, required_step: float, required_points: int):
        message = (
            f"Spectrum grid step {max_step:.4g} rad/s exceeds {required_step:.4g} rad/s "
            f"(need at least {required_points} points)"
        )
        super().__init__(message, "UNDERRESOLVED_SPECTRUM", {
            "max_step": max_step,
            "required_step": required_step,
            "required_points": required_points
        })


class FormatError(ScanError):
    """입력 파일 형식 오류"""
    exit_code = EXIT_IO

    def __init__(self, path: str, reason: str):
        super().__init__(f"Malformed file {path}: {reason}", "FORMAT_ERROR", {"path": path})


class NonMonotoneDelays(ScanError):
    """지연 시간이 단조 증가하지 않음"""
    exit_code = EXIT_IO

    def __init__(self, index: int):
        message = f"Delays are not strictly increasing at row {index}"
        super().__init__(message, "NON_MONOTONE_DELAYS", {"index": index})


class LeakageWarning(UserWarning):
    """스캔 가장자리 값이 피크의 1e-3 초과 (창 누설)"""
    pass


# === 설정 관련 예외 ===

class ConfigurationError(VacuumSamplingError):
    """실행 설정 오류"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, "CONFIGURATION_ERROR", details)


class PresetNotFound(ConfigurationError):
    """존재하지 않는 프리셋"""

    def __init__(self, name: str, search_dir: str):
        super().__init__(f"Preset '{name}' not found in {search_dir}", {"preset": name})
        self.error_code = "PRESET_NOT_FOUND"


# 에러 코드와 예외 클래스 매핑
ERROR_CODE_MAP = {
    "NONPOSITIVE_FREQUENCY": NonpositiveFrequency,
    "POLE_CROSSING": PoleCrossing,
    "DEGENERATE_RESONANCE": DegenerateResonance,
    "OUT_OF_TABLE_RANGE": OutOfTableRange,
    "QUADRATURE_FAILURE": QuadratureFailure,
    "NON_CONVERGENCE": NonConvergence,
    "DOMAIN_ERROR": DomainError,
    "BRANCH_VIOLATION": BranchViolation,
    "COINCIDENCE_REQUEST": CoincidenceRequest,
    "ABSORPTIVE_MEDIUM_UNSUPPORTED": AbsorptiveMediumUnsupported,
    "GRID_TOO_COARSE": GridTooCoarse,
    "UNDERRESOLVED_SPECTRUM": UnderresolvedSpectrum,
    "FORMAT_ERROR": FormatError,
    "NON_MONOTONE_DELAYS": NonMonotoneDelays,
    "CONFIGURATION_ERROR": ConfigurationError,
    "PRESET_NOT_FOUND": PresetNotFound,
}


def get_exception_class(error_code: str) -> type:
    """에러 코드로 예외 클래스 반환"""
    return ERROR_CODE_MAP.get(error_code, VacuumSamplingError)


def exit_code_for(exc: BaseException) -> int:
    """예외에 대응하는 CLI 종료 코드"""
    if isinstance(exc, VacuumSamplingError):
        return exc.exit_code
    if isinstance(exc, OSError):
        return EXIT_IO
    return 1
