"""
逐点代数不等式
特征值下界、行列式界、Einstein 非负截面曲率下的 s/√6 ≥ |W⁺| + |W⁻|、
Gauss-Bonnet 与符号差被积函数、平行 W⁺ 情形的 Weitzenböck 恒等式。
"""

import math
from typing import Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from src.config.config import Config
from src.geometry.curvature import CurvatureDecomposition, TraceFree3
from src.geometry.sectional import min_sectional_einstein

SQRT6 = math.sqrt(6.0)


class _Record(BaseModel):
    model_config = ConfigDict(frozen=True)


class EigenBoundReport(_Record):
    lambda_min: float
    frobenius: float
    # |λ_min| / (‖M‖_F/√6)，M = 0 时按约定为 1（饱和）
    ratio: float
    two_lambda_mu_nu: float
    identity_residual: float
    ok: bool
    saturated: bool


class DetBoundReport(_Record):
    lhs: float
    rhs: float
    ok: bool
    saturated: bool


class LemmaKReport(_Record):
    lhs: float
    rhs: float
    ok: bool
    margin: float
    min_sectional: float
    applicable: bool


class WeitzenbockReport(_Record):
    lhs: float
    rhs: float
    residual: float


class LemmaChainReport(_Record):
    sum_sq: float
    sum_norm_sq: float
    bound: float
    first_ok: bool
    second_ok: bool


def _lowest_pair_degenerate(values, scale: float) -> bool:
    return abs(values[1] - values[0]) <= Config.eigen_tol * max(scale, 1.0)


def eigen_lower_bound_report(m: TraceFree3, tol: Optional[float] = None) -> EigenBoundReport:
    """|λ_min| ≥ ‖M‖_F/√6，并回报 2[λ² - μν] 与 ‖M‖_F² 的一致性"""
    tol = Config.inequality_tol if tol is None else tol
    lam, mu, nu = m.eigenvalues()
    fro = m.norm()
    identity = 2.0 * (lam * lam - mu * nu)
    identity_residual = abs(identity - fro * fro) / max(fro * fro, 1e-300) if fro > 0 else abs(identity)
    if fro == 0.0:
        return EigenBoundReport(
            lambda_min=0.0,
            frobenius=0.0,
            ratio=1.0,
            two_lambda_mu_nu=identity,
            identity_residual=identity_residual,
            ok=True,
            saturated=True,
        )
    bound = fro / SQRT6
    return EigenBoundReport(
        lambda_min=lam,
        frobenius=fro,
        ratio=abs(lam) / bound,
        two_lambda_mu_nu=identity,
        identity_residual=identity_residual,
        ok=abs(lam) >= bound - tol * fro,
        saturated=_lowest_pair_degenerate((lam, mu, nu), fro),
    )


def det_bound_check(m: TraceFree3, tol: Optional[float] = None) -> DetBoundReport:
    """3√6·det M ≤ ‖M‖³；两个较小特征值重合且非正时取等"""
    tol = Config.inequality_tol if tol is None else tol
    values = m.eigenvalues()
    fro = m.norm()
    lhs = 3.0 * SQRT6 * values[0] * values[1] * values[2]
    rhs = fro**3
    return DetBoundReport(
        lhs=lhs,
        rhs=rhs,
        ok=lhs <= rhs + tol * rhs,
        saturated=_lowest_pair_degenerate(values, fro) and values[0] <= tol * max(fro, 1.0),
    )


def lemma_k_check(d: CurvatureDecomposition, tol: Optional[float] = None) -> LemmaKReport:
    """Einstein 且截面曲率非负时 s/√6 ≥ |W⁺| + |W⁻|

    applicable 标注极小截面曲率是否非负；为负时结果只作报告。
    """
    tol = Config.inequality_tol if tol is None else tol
    d.require_einstein()
    lhs = d.scalar / SQRT6
    rhs = d.w_plus.norm() + d.w_minus.norm()
    k_min = min_sectional_einstein(d)
    scale = max(abs(lhs), 1.0)
    return LemmaKReport(
        lhs=lhs,
        rhs=rhs,
        ok=lhs >= rhs - tol * scale,
        margin=lhs - rhs,
        min_sectional=k_min,
        applicable=k_min >= -tol * scale,
    )


def gauss_bonnet_integrand(d: CurvatureDecomposition) -> float:
    """(1/8π²)[|W⁺|² + |W⁻|² + s²/24 - |r̊|²/2]"""
    total = d.w_plus_norm_sq + d.w_minus_norm_sq + d.scalar**2 / 24.0 - d.traceless_ricci_norm_sq / 2.0
    return total / (8.0 * math.pi**2)


def signature_integrand(d: CurvatureDecomposition) -> float:
    """(1/12π²)[|W⁺|² - |W⁻|²]"""
    return (d.w_plus_norm_sq - d.w_minus_norm_sq) / (12.0 * math.pi**2)


def weitzenbock_from_spectrum(scalar, eigenvalues: Sequence) -> Tuple:
    """由 s 与 W⁺ 的特征值计算 ((s/2)|W⁺|², 18 det W⁺)

    只用加法与乘法，传入 Fraction 即得精确结果。
    """
    norm_sq = sum(e * e for e in eigenvalues)
    det = eigenvalues[0] * eigenvalues[1] * eigenvalues[2]
    return scalar * norm_sq / 2, 18 * det


def weitzenbock_parallel_check(d: CurvatureDecomposition) -> WeitzenbockReport:
    """∇W⁺ = 0 且 Δ|W⁺|² = 0 时 (s/2)|W⁺|² = 18 det W⁺"""
    d.require_einstein()
    lhs = d.scalar / 2.0 * d.w_plus_norm_sq
    rhs = 18.0 * d.w_plus.det()
    scale = max(abs(lhs), abs(rhs))
    residual = abs(lhs - rhs) / scale if scale > 0 else 0.0
    return WeitzenbockReport(lhs=lhs, rhs=rhs, residual=residual)


def pointwise_lemma_chain(d: CurvatureDecomposition, tol: Optional[float] = None) -> LemmaChainReport:
    """|W⁺|² + |W⁻|² ≤ (|W⁺| + |W⁻|)² ≤ s²/6，后一步需要非负截面曲率"""
    tol = Config.inequality_tol if tol is None else tol
    a, b = d.w_plus.norm(), d.w_minus.norm()
    sum_sq = a * a + b * b
    sum_norm_sq = (a + b) ** 2
    bound = d.scalar**2 / 6.0
    scale = max(bound, 1.0)
    return LemmaChainReport(
        sum_sq=sum_sq,
        sum_norm_sq=sum_norm_sq,
        bound=bound,
        first_ok=sum_sq <= sum_norm_sq + tol * scale,
        second_ok=sum_norm_sq <= bound + tol * scale,
    )

