"""
共形变换与 𝔖 = s - 2√6|W⁺|

对 ĝ = u²g 有 𝔖_ĝ = u⁻³(6Δu + 𝔖u)，Δ 为正 Laplace-Beltrami 算子。
"""

import math
from typing import Callable, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from src.config.config import Config
from src.errors import ChartError
from src.log import log
from src.models.chart import Chart
from src.models.finite_difference import curvature_operators, laplacian_at
from src.geometry.curvature import decompose_batch

ScalarFn = Callable[[np.ndarray], np.ndarray]

SQRT6 = math.sqrt(6.0)


class ConvergenceStudy(BaseModel):
    model_config = ConfigDict(frozen=True)

    steps: List[float]
    residuals: List[float]
    # 相邻步长残差之比的 log₂
    observed_orders: List[float]
    extrapolated: float


def gaussian_bump(center: Sequence[float], amplitude: float = 0.3, width: float = 0.5) -> ScalarFn:
    """u = 1 + amplitude·exp(-|x - x₀|²/(2 width²))"""
    center = np.asarray(center, dtype=float)

    def u(x: np.ndarray) -> np.ndarray:
        d2 = np.sum((x - center) ** 2, axis=-1)
        return 1.0 + amplitude * np.exp(-d2 / (2.0 * width * width))

    return u


def constant_factor(c: float) -> ScalarFn:
    return lambda x: np.full(np.shape(x)[:-1], float(c))


def _sample_points(chart: Chart, count: int = 64) -> np.ndarray:
    rng = np.random.default_rng(0)
    params = rng.uniform(0.05, 0.95, size=(count, 4))
    points, _ = chart.quadrature_points(params)
    return np.vstack([chart.reference_point[None], points])


def conformal_rescale(chart: Chart, u: ScalarFn) -> Chart:
    """度量乘以 u²；在参考点与一组采样点上检查 u > 0"""
    values = np.asarray(u(_sample_points(chart)))
    if not np.all(np.isfinite(values)) or np.any(values <= 0):
        raise ChartError(f"共形因子在坐标卡 {chart.name} 上必须处处为正, 最小值 {np.min(values):.3g}")
    metric_fn = chart.metric_fn

    def metric(x: np.ndarray) -> np.ndarray:
        return (np.asarray(u(x)) ** 2)[..., None, None] * metric_fn(x)

    return chart.with_metric(metric, name=f"{chart.name}*u^2")


def frak_s_batch(chart: Chart, points: np.ndarray, step: Optional[float] = None, levels: Optional[int] = None) -> np.ndarray:
    parts = decompose_batch(curvature_operators(chart, points, step, levels))
    w_norm = np.sqrt(np.sum(parts["w_plus"] ** 2, axis=(-2, -1)))
    return parts["scalar"] - 2.0 * SQRT6 * w_norm


def frak_S_at(chart: Chart, x, step: Optional[float] = None, levels: Optional[int] = None) -> float:
    """𝔖 = s - 2√6|W⁺| 在 x 处的值"""
    return float(frak_s_batch(chart, np.asarray(x, dtype=float)[None], step, levels)[0])


def conformal_law_residual(
    chart: Chart,
    u: ScalarFn,
    x,
    step: Optional[float] = None,
    levels: Optional[int] = None,
) -> float:
    """𝔖_{u²g}(x)·u(x)³ - [6(Δ_g u)(x) + 𝔖_g(x)u(x)]"""
    point = np.asarray(x, dtype=float)[None]
    rescaled = conformal_rescale(chart, u)
    u_x = float(np.asarray(u(point))[0])
    frak_hat = frak_s_batch(rescaled, point, step, levels)[0]
    frak = frak_s_batch(chart, point, step, levels)[0]
    lap = laplacian_at(chart, u, point, step, levels)[0]
    return float(frak_hat * u_x**3 - (6.0 * lap + frak * u_x))


def conformal_convergence_study(
    chart: Chart,
    u: ScalarFn,
    x,
    steps: Sequence[float] = (0.04, 0.02, 0.01),
) -> ConvergenceStudy:
    """关闭 Richardson 外推，逐次减半步长观察 O(h²) 收敛

    外推残差取最后两级 (4r(h/2) - r(h))/3。
    """
    if len(steps) < 2:
        raise ChartError("收敛研究至少需要两个步长")
    residuals = [conformal_law_residual(chart, u, x, step=h, levels=1) for h in steps]
    orders = []
    for coarse, fine, h0, h1 in zip(residuals, residuals[1:], steps, steps[1:]):
        if fine == 0.0 or coarse == 0.0:
            orders.append(float("inf"))
        else:
            orders.append(math.log(abs(coarse / fine)) / math.log(h0 / h1))
    extrapolated = (4.0 * residuals[-1] - residuals[-2]) / 3.0
    log.debug(f"{chart.name}: 共形律残差 {residuals}, 观测阶 {orders}, 外推 {extrapolated:.3e}")
    return ConvergenceStudy(
        steps=list(steps),
        residuals=residuals,
        observed_orders=orders,
        extrapolated=extrapolated,
    )


def default_bump_point(chart: Chart) -> np.ndarray:
    """收敛研究的默认求值点：参考点附近的一般位置"""
    return chart.reference_point + np.array([0.1, 0.05, -0.05, 0.02])


def default_steps() -> List[float]:
    base = 40.0 * Config.fd_step
    return [base, base / 2.0, base / 4.0]
