"""
模型流形上的积分不变量

dμ = √det(g) d⁴x，在坐标卡参数盒上做乘积 Gauss-Legendre 求积；
χ 由 Chern-Gauss-Bonnet 被积函数、τ 由 Hirzebruch 符号差被积函数积分得到。
求和按固定节点顺序用 math.fsum（精确舍入），结果与分块方式无关。
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict

from src.config.config import Config
from src.enums.report_def import Orientation
from src.errors import QuadratureError
from src.geometry.curvature import curvature_terms_batch
from src.log import log
from src.models.catalog import ModelManifold
from src.models.chart import Chart
from src.models.finite_difference import curvature_operators
from src.quadrature.gauss_legendre import QuadratureScheme, QuadratureSpec

Target = Union[ModelManifold, Chart]
ScalarFn = Callable[[np.ndarray], np.ndarray]

_TERMS = ("w_plus_sq", "w_minus_sq", "scalar", "scalar_sq", "ricci0_sq")


class Verdict(BaseModel):
    """一条比较结论；margin > 0 表示成立，等式型比较的 margin = 容差 - |lhs - rhs|"""

    model_config = ConfigDict(frozen=True)

    name: str
    relation: str
    lhs: float
    rhs: float
    margin: float
    ok: bool


def strict_less(name: str, lhs: float, rhs: float) -> Verdict:
    return Verdict(name=name, relation="<", lhs=lhs, rhs=rhs, margin=rhs - lhs, ok=lhs < rhs)


def less_equal(name: str, lhs: float, rhs: float, tol: float) -> Verdict:
    margin = rhs - lhs
    return Verdict(name=name, relation="<=", lhs=lhs, rhs=rhs, margin=margin, ok=margin >= -tol)


def approx_equal(name: str, lhs: float, rhs: float, tol: float) -> Verdict:
    margin = tol - abs(lhs - rhs)
    return Verdict(name=name, relation="~=", lhs=lhs, rhs=rhs, margin=margin, ok=margin >= 0)


class TermIntegrals(BaseModel):
    """各曲率平方项的积分，定向由 orientation 标注"""

    model_config = ConfigDict(frozen=True)

    orientation: Orientation = Orientation.Standard
    volume: float
    w_plus_sq: float
    w_minus_sq: float
    scalar: float
    scalar_sq: float
    ricci0_sq: float

    def oriented(self, orientation: Orientation) -> "TermIntegrals":
        if orientation == self.orientation:
            return self
        return self.model_copy(
            update={
                "orientation": orientation,
                "w_plus_sq": self.w_minus_sq,
                "w_minus_sq": self.w_plus_sq,
            }
        )

    @property
    def euler_characteristic(self) -> float:
        return (
            self.w_plus_sq + self.w_minus_sq + self.scalar_sq / 24.0 - self.ricci0_sq / 2.0
        ) / (8.0 * math.pi**2)

    @property
    def signature(self) -> float:
        return (self.w_plus_sq - self.w_minus_sq) / (12.0 * math.pi**2)

    @property
    def total_scalar(self) -> float:
        return self.scalar / math.sqrt(self.volume)

    @property
    def curvature_scale(self) -> float:
        return max(self.w_plus_sq + self.w_minus_sq + self.scalar_sq / 24.0, 1.0)

    def is_einstein(self, tol: Optional[float] = None) -> bool:
        tol = Config.quad_tol if tol is None else tol
        return self.ricci0_sq <= tol * self.curvature_scale

    def is_flat(self, tol: Optional[float] = None) -> bool:
        tol = Config.quad_tol if tol is None else tol
        total = self.w_plus_sq + self.w_minus_sq + self.scalar_sq + self.ricci0_sq
        return total <= tol * max(self.volume, 1.0)


class InvariantReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    model: str
    chart: str
    orientation: Orientation
    scheme: QuadratureScheme
    orders: Tuple[int, int, int, int]
    volume: float
    euler_characteristic: float
    signature: float
    total_scalar: float
    scalar_integral: float
    w_plus_sq_integral: float
    w_minus_sq_integral: float
    # ∫s²/24 dμ
    scalar_sq_24_integral: float
    # ∫|r̊|²/2 dμ
    ricci0_sq_half_integral: float
    chi_integer_error: float
    tau_integer_error: float
    verdicts: List[Verdict]

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts)


def chart_of(target: Target) -> Chart:
    return target.chart if isinstance(target, ModelManifold) else target


def label_of(target: Target) -> str:
    return target.label() if isinstance(target, ModelManifold) else target.name


def _resolve_spec(spec: Optional[QuadratureSpec]) -> QuadratureSpec:
    return QuadratureSpec.from_order() if spec is None else spec


def _product(spec: QuadratureSpec) -> QuadratureSpec:
    return spec.model_copy(update={"scheme": QuadratureScheme.Product})


@dataclass(frozen=True)
class MeasureNodes:
    points: np.ndarray
    # Gauss 权重 × 参数化 Jacobian × √det g
    weights: np.ndarray


@lru_cache(maxsize=32)
def measure_nodes(chart: Chart, spec: QuadratureSpec) -> MeasureNodes:
    params, w = spec.nodes()
    points, jacobian = chart.quadrature_points(params)
    g = chart.metric(points)
    weights = w * jacobian * np.sqrt(np.linalg.det(g))
    _require_finite(weights, points, f"{chart.name} 的体积元")
    points.setflags(write=False)
    weights.setflags(write=False)
    return MeasureNodes(points, weights)


def _require_finite(values: np.ndarray, points: np.ndarray, what: str) -> None:
    bad = ~np.isfinite(values)
    if np.any(bad):
        idx = int(np.argmax(bad))
        node = points[idx].tolist()
        raise QuadratureError(f"{what} 在节点 {idx} {node} 处不是有限值", node=node)


def _weighted_sum(values: np.ndarray, nodes: MeasureNodes, what: str) -> float:
    values = np.asarray(values, dtype=float)
    _require_finite(values, nodes.points, what)
    return math.fsum((values * nodes.weights).tolist())


def volume(target: Target, spec: Optional[QuadratureSpec] = None) -> float:
    """∫dμ；齐性捷径下体积本身仍用完整求积"""
    chart = chart_of(target)
    nodes = measure_nodes(chart, _product(_resolve_spec(spec)))
    return math.fsum(nodes.weights.tolist())


def integrate(target: Target, f: ScalarFn, spec: Optional[QuadratureSpec] = None) -> float:
    """∫f dμ，f 把 (N, 4) 坐标点映为 (N,) 值"""
    spec = _resolve_spec(spec)
    chart = chart_of(target)
    if spec.scheme == QuadratureScheme.Homogeneous:
        ref = chart.reference_point[None]
        value = np.asarray(f(ref), dtype=float)
        _require_finite(value, ref, "被积函数")
        return float(value[0]) * volume(chart, spec)
    nodes = measure_nodes(chart, spec)
    return _weighted_sum(f(nodes.points), nodes, "被积函数")


@lru_cache(maxsize=32)
def _term_integrals(chart: Chart, spec: QuadratureSpec, step: float, levels: int) -> TermIntegrals:
    vol = volume(chart, spec)
    if spec.scheme == QuadratureScheme.Homogeneous:
        ref = chart.reference_point[None]
        ops = curvature_operators(chart, ref, step, levels)
        terms = curvature_terms_batch(ops)
        for key in _TERMS:
            _require_finite(terms[key], ref, key)
        sums = {key: float(terms[key][0]) * vol for key in _TERMS}
    else:
        nodes = measure_nodes(chart, spec)
        terms = curvature_terms_batch(curvature_operators(chart, nodes.points, step, levels))
        sums = {key: _weighted_sum(terms[key], nodes, key) for key in _TERMS}
    log.debug(f"{chart.name}: {spec.scheme.value} 求积 orders={spec.orders}, 体积 {vol:.12g}")
    return TermIntegrals(volume=vol, **sums)


def term_integrals(
    target: Target,
    spec: Optional[QuadratureSpec] = None,
    orientation: Orientation = Orientation.Standard,
) -> TermIntegrals:
    """一次曲率求值得到全部平方项积分（按坐标卡、求积方案与差分设置缓存）"""
    spec = _resolve_spec(spec)
    terms = _term_integrals(chart_of(target), spec, Config.fd_step, Config.richardson_levels)
    return terms.oriented(orientation)


def euler_characteristic(target: Target, spec: Optional[QuadratureSpec] = None) -> float:
    return term_integrals(target, spec).euler_characteristic


def signature(
    target: Target,
    spec: Optional[QuadratureSpec] = None,
    orientation: Orientation = Orientation.Standard,
) -> float:
    return term_integrals(target, spec, orientation).signature


def total_scalar_functional(target: Target, spec: Optional[QuadratureSpec] = None) -> float:
    """𝒮(g) = ∫s dμ / (∫dμ)^{1/2}"""
    return term_integrals(target, spec).total_scalar


def _reference_verdicts(model: ModelManifold, terms: TermIntegrals) -> List[Verdict]:
    ref = model.reference
    sign = 1 if terms.orientation == Orientation.Standard else -1
    tol = Config.quad_tol
    return [
        approx_equal("volume_reference", terms.volume, ref.volume, tol * ref.volume),
        approx_equal(
            "chi_reference", terms.euler_characteristic, ref.euler_characteristic, Config.quad_integer_tol
        ),
        approx_equal("tau_reference", terms.signature, sign * ref.signature, Config.quad_integer_tol),
        approx_equal(
            "total_scalar_reference",
            terms.total_scalar,
            ref.scalar * math.sqrt(ref.volume),
            tol * max(abs(ref.scalar) * math.sqrt(ref.volume), 1.0),
        ),
    ]


def invariant_report(
    target: Target,
    spec: Optional[QuadratureSpec] = None,
    orientation: Orientation = Orientation.Standard,
) -> InvariantReport:
    spec = _resolve_spec(spec)
    terms = term_integrals(target, spec, orientation)
    chi, tau = terms.euler_characteristic, terms.signature
    verdicts = [
        approx_equal("chi_integer", chi, float(round(chi)), Config.quad_integer_tol),
        approx_equal("tau_integer", tau, float(round(tau)), Config.quad_integer_tol),
    ]
    if isinstance(target, ModelManifold):
        verdicts.extend(_reference_verdicts(target, terms))
    report = InvariantReport(
        model=label_of(target),
        chart=chart_of(target).name,
        orientation=orientation,
        scheme=spec.scheme,
        orders=spec.orders,
        volume=terms.volume,
        euler_characteristic=chi,
        signature=tau,
        total_scalar=terms.total_scalar,
        scalar_integral=terms.scalar,
        w_plus_sq_integral=terms.w_plus_sq,
        w_minus_sq_integral=terms.w_minus_sq,
        scalar_sq_24_integral=terms.scalar_sq / 24.0,
        ricci0_sq_half_integral=terms.ricci0_sq / 2.0,
        chi_integer_error=abs(chi - round(chi)),
        tau_integer_error=abs(tau - round(tau)),
        verdicts=verdicts,
    )
    log.info(f"{report.model}: χ={chi:.9f}, τ={tau:.9f}, vol={terms.volume:.9g}, 𝒮={terms.total_scalar:.9g}")
    return report


def homogeneous_cross_check(target: Target, spec: Optional[QuadratureSpec] = None) -> Verdict:
    """齐性捷径与完整求积的 ∫s dμ 之相对差"""
    spec = _product(_resolve_spec(spec))
    full = term_integrals(target, spec).scalar
    shortcut = term_integrals(target, spec.model_copy(update={"scheme": QuadratureScheme.Homogeneous})).scalar
    scale = max(abs(full), 1.0)
    return approx_equal("homogeneous_shortcut", shortcut, full, Config.quad_tol * scale)
