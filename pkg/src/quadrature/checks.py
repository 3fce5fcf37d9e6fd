"""
积分不等式检查
χ 的上界、W⁺ 的间隙定理及其推论、Bishop 体积比较、
𝒮(g) 的数值窗口、有限性界、χ-τ 不等式链与 ∫|W⁺|² 的共形不变性。

每个检查返回带符号余量的记录；假设不满足时 applicable = False 并给出原因，不抛异常。
"""

import math
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from src.config.config import Config
from src.enums.report_def import Orientation
from src.geometry.curvature import CurvatureOperator
from src.geometry.sectional import min_sectional
from src.log import log
from src.models.catalog import ModelManifold, homothety
from src.models.conformal import ScalarFn, conformal_rescale, gaussian_bump
from src.models.finite_difference import curvature_operators
from src.quadrature.gauss_legendre import QuadratureSpec
from src.quadrature.invariants import (
    Target,
    TermIntegrals,
    Verdict,
    approx_equal,
    chart_of,
    label_of,
    less_equal,
    strict_less,
    term_integrals,
    volume,
)

PI2 = math.pi**2
SPHERE_VOLUME = 8.0 * PI2 / 3.0
FUBINI_STUDY_TOTAL_SCALAR = 12.0 * math.pi * math.sqrt(2.0)
ROUND_SPHERE_TOTAL_SCALAR = 8.0 * math.pi * math.sqrt(6.0)


class _Check(BaseModel):
    model_config = ConfigDict(frozen=True)

    applicable: bool = True
    reason: str = ""
    verdicts: List[Verdict] = []

    @property
    def ok(self) -> bool:
        return (not self.applicable) or all(v.ok for v in self.verdicts)


class LemmaChiResult(_Check):
    model: str
    chi: float
    # (5/8π²)∫s²/24 dμ
    bound: float
    margin: float
    strict: bool


class GapTheoremResult(_Check):
    model: str
    orientation: Orientation
    w_plus_sq_integral: float
    scalar_sq_24_integral: float
    theorem_applicable: bool
    theorem_margin: float
    # 等号成立即 ∇W⁺ ≡ 0
    equality: bool
    corollary_i_lhs: float
    corollary_i_applicable: bool
    corollary_ii_lhs: float
    corollary_ii_applicable: bool
    corollary_ii_equality: bool
    # (1/4π²)∫s²/24 dμ，(i)(ii) 共用
    corollary_rhs: float


class BishopResult(_Check):
    model: str
    einstein_constant: float
    homothety_factor: float
    rescaled_volume: float
    sphere_volume: float
    margin: float
    equality: bool


class FinitenessResult(_Check):
    model: str
    homothety_factor: float
    min_sectional: float
    max_sectional: float
    rescaled_volume: float
    volume_lower_bound: float


class ChainLink(BaseModel):
    model_config = ConfigDict(frozen=True)

    orientation: Orientation
    # (2/3)χ - τ
    left: float
    # (1/4π²)∫s²/24 dμ
    middle: float
    # (2/5)χ
    right: float
    # 左不等式需要该定向下 W⁻ ≢ 0
    left_applicable: bool
    left_margin: float
    right_margin: float


class ChainResult(_Check):
    model: str
    links: List[ChainLink]


class ScalarWindow(BaseModel):
    model_config = ConfigDict(frozen=True)

    chi: int
    tau: int
    # ∫s² dμ 的上下界与 𝒮(g) = √∫s² 的对应界（Einstein 时 𝒮² = ∫s²）
    scalar_sq_lower: float
    scalar_sq_upper: float
    total_scalar_lower: float
    total_scalar_upper: float


class BoundsReport(_Check):
    cp2_reference: float
    cp2_upper: float
    s4_reference: float
    s4_lower: float
    s4_upper: float
    cp2_window: ScalarWindow
    s4_window: ScalarWindow


class WeylInvarianceResult(_Check):
    model: str
    before: float
    after: float
    relative_change: float


def _not_applicable(cls, reason: str, **fields):
    log.warning(f"{cls.__name__}: {reason}")
    return cls(applicable=False, reason=reason, **fields)


def _einstein_constant(terms: TermIntegrals) -> float:
    return terms.scalar / (4.0 * terms.volume)


def lemma_chi_check(target: Target, spec: Optional[QuadratureSpec] = None) -> LemmaChiResult:
    """χ < (5/8π²)∫s²/24 dμ，前提是度量 Einstein 且不平坦"""
    terms = term_integrals(target, spec)
    chi = terms.euler_characteristic
    bound = 5.0 / (8.0 * PI2) * terms.scalar_sq / 24.0
    fields = dict(model=label_of(target), chi=chi, bound=bound, margin=bound - chi, strict=chi < bound)
    if terms.is_flat():
        return _not_applicable(LemmaChiResult, "度量平坦，上界不适用", **fields)
    if not terms.is_einstein():
        return _not_applicable(LemmaChiResult, "度量不是 Einstein 的", **fields)
    return LemmaChiResult(verdicts=[strict_less("chi_below_bound", chi, bound)], **fields)


def gap_theorem_check(
    target: Target,
    orientation: Orientation = Orientation.Standard,
    spec: Optional[QuadratureSpec] = None,
) -> GapTheoremResult:
    """在给定定向下检查 ∫|W⁺|² ≥ ∫s²/24 及推论 (i)(ii)

    (i) (2χ+3τ)/3 ≥ (1/4π²)∫s²/24 需要 W⁺ ≢ 0；
    (ii) (2χ-3τ)/3 ≥ (1/4π²)∫s²/24 需要 W⁻ ≢ 0。
    """
    terms = term_integrals(target, spec, orientation)
    tol = Config.quad_tol * terms.curvature_scale
    s_term = terms.scalar_sq / 24.0
    chi, tau = terms.euler_characteristic, terms.signature
    rhs = s_term / (4.0 * PI2)
    lhs_i = (2.0 * chi + 3.0 * tau) / 3.0
    lhs_ii = (2.0 * chi - 3.0 * tau) / 3.0
    w_plus_on = terms.w_plus_sq > tol
    w_minus_on = terms.w_minus_sq > tol
    theorem_margin = terms.w_plus_sq - s_term
    fields = dict(
        model=label_of(target),
        orientation=orientation,
        w_plus_sq_integral=terms.w_plus_sq,
        scalar_sq_24_integral=s_term,
        theorem_applicable=w_plus_on,
        theorem_margin=theorem_margin,
        equality=w_plus_on and abs(theorem_margin) <= tol,
        corollary_i_lhs=lhs_i,
        corollary_i_applicable=w_plus_on,
        corollary_ii_lhs=lhs_ii,
        corollary_ii_applicable=w_minus_on,
        corollary_ii_equality=w_minus_on and abs(lhs_ii - rhs) <= Config.quad_tol * max(rhs, 1.0),
        corollary_rhs=rhs,
    )
    if not (terms.is_einstein() and terms.scalar > tol):
        return _not_applicable(GapTheoremResult, "需要 s > 0 的 Einstein 度量", **fields)
    if not (w_plus_on or w_minus_on):
        return _not_applicable(GapTheoremResult, "W⁺ 与 W⁻ 都恒为零，定理与推论的假设均不满足", **fields)

    verdicts = []
    itol = Config.quad_tol * max(rhs, 1.0)
    if w_plus_on:
        verdicts.append(less_equal("w_plus_gap", s_term, terms.w_plus_sq, tol))
        verdicts.append(less_equal("corollary_i", rhs, lhs_i, itol))
    if w_minus_on:
        verdicts.append(less_equal("corollary_ii", rhs, lhs_ii, itol))
    reason = "" if w_plus_on else "该定向下 W⁺ ≡ 0，定理分支不适用，只检查推论 (ii)"
    return GapTheoremResult(verdicts=verdicts, reason=reason, **fields)


def _rescaled(target: Target, c: float) -> Target:
    if isinstance(target, ModelManifold):
        return homothety(target, c)
    metric_fn = target.metric_fn
    return target.with_metric(lambda x: c * metric_fn(x), name=f"{target.name}*{c:g}")


def bishop_volume_check(target: Target, spec: Optional[QuadratureSpec] = None) -> BishopResult:
    """把度量乘以 λ/3 使 r = 3g，再与单位 S⁴ 的体积 8π²/3 比较"""
    terms = term_integrals(target, spec)
    lam = _einstein_constant(terms)
    fields = dict(
        model=label_of(target),
        einstein_constant=lam,
        homothety_factor=float("nan"),
        rescaled_volume=float("nan"),
        sphere_volume=SPHERE_VOLUME,
        margin=float("nan"),
        equality=False,
    )
    if not terms.is_einstein():
        return _not_applicable(BishopResult, "度量不是 Einstein 的", **fields)
    if lam <= Config.quad_tol:
        return _not_applicable(BishopResult, f"Einstein 常数 λ = {lam:.6g} 不为正", **fields)
    c = lam / 3.0
    rescaled = volume(_rescaled(target, c), spec)
    tol = Config.quad_tol * SPHERE_VOLUME
    fields.update(
        homothety_factor=c,
        rescaled_volume=rescaled,
        margin=SPHERE_VOLUME - rescaled,
        equality=abs(SPHERE_VOLUME - rescaled) <= tol,
    )
    return BishopResult(verdicts=[less_equal("bishop_volume", rescaled, SPHERE_VOLUME, tol)], **fields)


def _sample_points(target: Target, count: int = 4) -> np.ndarray:
    chart = chart_of(target)
    rng = np.random.default_rng(Config.seed)
    points, _ = chart.quadrature_points(rng.uniform(0.2, 0.8, size=(count, 4)))
    return np.vstack([chart.reference_point[None], points])


def finiteness_bounds_check(target: Target, spec: Optional[QuadratureSpec] = None) -> FinitenessResult:
    """r = 3g 归一化后截面曲率落在 [0, 3]，体积 ≥ 8π²χ/30 ≥ 8π²/15

    体积下界来自 Gauss-Bonnet 与逐点的 |W⁺|² + |W⁻|² ≤ s²/6：s = 12 时被积函数不超过 30/8π²。
    """
    terms = term_integrals(target, spec)
    lam = _einstein_constant(terms)
    chi = terms.euler_characteristic
    fields = dict(
        model=label_of(target),
        homothety_factor=float("nan"),
        min_sectional=float("nan"),
        max_sectional=float("nan"),
        rescaled_volume=float("nan"),
        volume_lower_bound=8.0 * PI2 * max(chi, 2.0) / 30.0,
    )
    if not terms.is_einstein() or lam <= Config.quad_tol:
        return _not_applicable(FinitenessResult, "需要 λ > 0 的 Einstein 度量", **fields)
    c = lam / 3.0
    rescaled = _rescaled(target, c)
    ops = curvature_operators(chart_of(rescaled), _sample_points(rescaled))
    lows, highs = [], []
    for m in ops:
        lows.append(min_sectional(CurvatureOperator(m, tol=1e-8)).value)
        highs.append(-min_sectional(CurvatureOperator(-m, tol=1e-8)).value)
    k_min, k_max = min(lows), max(highs)
    vol = volume(rescaled, spec)
    tol = Config.quad_tol
    fields.update(homothety_factor=c, min_sectional=k_min, max_sectional=k_max, rescaled_volume=vol)
    verdicts = [
        less_equal("sectional_lower", 0.0, k_min, tol),
        less_equal("sectional_upper", k_max, 3.0, tol * 3.0),
        less_equal("volume_lower", fields["volume_lower_bound"], vol, tol * vol),
    ]
    if k_min < -tol:
        # 截面曲率有负值时不满足定理前提，仍然报告数值
        return FinitenessResult(applicable=False, reason=f"最小截面曲率 {k_min:.6g} < 0", verdicts=verdicts, **fields)
    return FinitenessResult(verdicts=verdicts, **fields)


def theorem_b_chain(target: Target, spec: Optional[QuadratureSpec] = None) -> ChainResult:
    """两种定向下的 (2/3)χ - τ ≥ (1/4π²)∫s²/24 > (2/5)χ，只报告不断言"""
    links = []
    for orientation in Orientation:
        terms = term_integrals(target, spec, orientation)
        chi, tau = terms.euler_characteristic, terms.signature
        left = 2.0 * chi / 3.0 - tau
        middle = terms.scalar_sq / 24.0 / (4.0 * PI2)
        right = 2.0 * chi / 5.0
        links.append(
            ChainLink(
                orientation=orientation,
                left=left,
                middle=middle,
                right=right,
                left_applicable=terms.w_minus_sq > Config.quad_tol * terms.curvature_scale,
                left_margin=left - middle,
                right_margin=middle - right,
            )
        )
    terms = term_integrals(target, spec)
    applicable = terms.is_einstein() and not terms.is_flat()
    verdicts = []
    for link in links:
        tol = Config.quad_tol * max(link.middle, 1.0)
        if link.left_applicable:
            verdicts.append(less_equal(f"chain_left_{link.orientation.value}", link.middle, link.left, tol))
        verdicts.append(strict_less(f"chain_right_{link.orientation.value}", link.right, link.middle))
    reason = "" if applicable else "需要非平坦 Einstein 度量，链只作报告"
    return ChainResult(model=label_of(target), links=links, applicable=applicable, reason=reason, verdicts=verdicts)


def scalar_window(chi: int, tau: int) -> ScalarWindow:
    """非负截面曲率 Einstein 度量的 ∫s² 窗口

    上界 ∫s² ≤ 4π²·24·(2χ - 3τ)/3 来自 W⁻ ≢ 0 时的推论，
    下界 ∫s² > 24·(8π²/5)χ 来自 χ 的严格上界。
    """
    upper = 4.0 * PI2 * 24.0 * (2 * chi - 3 * tau) / 3.0
    lower = 24.0 * 8.0 * PI2 * chi / 5.0
    return ScalarWindow(
        chi=chi,
        tau=tau,
        scalar_sq_lower=lower,
        scalar_sq_upper=upper,
        total_scalar_lower=math.sqrt(lower),
        total_scalar_upper=math.sqrt(max(upper, 0.0)),
    )


def corollary_chain_s4_bound() -> ScalarWindow:
    """S⁴ 上 ∫s² ≤ 2⁷π²"""
    return scalar_window(2, 0)


def theorem_c_d_bounds_report() -> BoundsReport:
    """ℂP² 与 S⁴ 上其它 Einstein 度量的 𝒮(g) 数值窗口，并与推论链推出的界交叉核对"""
    cp2_upper = FUBINI_STUDY_TOTAL_SCALAR / math.sqrt(3.0)
    s4_lower = ROUND_SPHERE_TOTAL_SCALAR / math.sqrt(5.0)
    s4_upper = ROUND_SPHERE_TOTAL_SCALAR / math.sqrt(3.0)
    cp2_window = scalar_window(3, 1)
    s4_window = corollary_chain_s4_bound()
    tol = 1e-12 * ROUND_SPHERE_TOTAL_SCALAR
    verdicts = [
        approx_equal("cp2_upper_closed_form", cp2_upper, 4.0 * math.pi * math.sqrt(6.0), tol),
        approx_equal("cp2_upper_from_chain", cp2_window.total_scalar_upper, cp2_upper, tol),
        approx_equal("s4_lower_closed_form", s4_lower, 8.0 * math.pi * math.sqrt(6.0 / 5.0), tol),
        approx_equal("s4_upper_closed_form", s4_upper, 8.0 * math.pi * math.sqrt(2.0), tol),
        approx_equal("s4_lower_from_chain", s4_window.total_scalar_lower, s4_lower, tol),
        approx_equal("s4_upper_from_chain", s4_window.total_scalar_upper, s4_upper, tol),
        strict_less("cp2_reference_excluded", cp2_upper, FUBINI_STUDY_TOTAL_SCALAR),
        strict_less("s4_reference_excluded", s4_upper, ROUND_SPHERE_TOTAL_SCALAR),
        strict_less("s4_window_nonempty", s4_lower, s4_upper),
    ]
    return BoundsReport(
        cp2_reference=FUBINI_STUDY_TOTAL_SCALAR,
        cp2_upper=cp2_upper,
        s4_reference=ROUND_SPHERE_TOTAL_SCALAR,
        s4_lower=s4_lower,
        s4_upper=s4_upper,
        cp2_window=cp2_window,
        s4_window=s4_window,
        verdicts=verdicts,
    )


def conformal_weyl_invariance(
    target: Target,
    u: Optional[ScalarFn] = None,
    spec: Optional[QuadratureSpec] = None,
    amplitude: float = 0.05,
) -> WeylInvarianceResult:
    """共形变换前后的 ∫|W⁺|² dμ；u 缺省为参考点处振幅 amplitude 的 Gauss 鼓包"""
    chart = chart_of(target)
    if u is None:
        u = gaussian_bump(chart.reference_point, amplitude=amplitude)
    before = term_integrals(chart, spec).w_plus_sq
    after = term_integrals(conformal_rescale(chart, u), spec).w_plus_sq
    scale = max(abs(before), 1.0)
    return WeylInvarianceResult(
        model=label_of(target),
        before=before,
        after=after,
        relative_change=abs(after - before) / scale,
        verdicts=[approx_equal("w_plus_conformal", after, before, Config.quad_tol * scale)],
    )
