"""
坐标卡
每个模型用一张缺一个零测集的坐标卡实现；坐标卡同时携带求积用的参数化
（单位立方体 [0,1]⁴ → 坐标点，附带 Jacobian）与参考点。
度量函数是向量化的：(..., 4) 的点 → (..., 4, 4) 的对称正定矩阵。
"""

from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Tuple

import numpy as np

from src.errors import ChartError

MetricFn = Callable[[np.ndarray], np.ndarray]
Parametrization = Callable[[np.ndarray], Tuple[np.ndarray, np.ndarray]]


@dataclass(frozen=True, eq=False)
class Chart:
    name: str
    # (4, 2)：每个坐标的 [下界, 上界]，可以是 ±inf
    domain: np.ndarray
    metric_fn: MetricFn
    measure_zero_excluded: str
    parametrization: Parametrization
    reference_point: np.ndarray
    # 周期坐标不做边界余量检查
    periodic: Tuple[bool, bool, bool, bool] = (False, False, False, False)
    # 非紧坐标卡的差分步长按 (1 + |x|) 放大
    scale_step: bool = False
    description: str = field(default="")

    def __post_init__(self):
        domain = np.asarray(self.domain, dtype=float)
        if domain.shape != (4, 2) or np.any(domain[:, 0] >= domain[:, 1]):
            raise ChartError(f"坐标卡 {self.name} 的定义域不合法")
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "reference_point", np.asarray(self.reference_point, dtype=float))

    def metric(self, points: np.ndarray, check: bool = True) -> np.ndarray:
        g = np.asarray(self.metric_fn(np.asarray(points, dtype=float)), dtype=float)
        if check:
            check_spd(g, self.name)
        return g

    def step_sizes(self, points: np.ndarray, step: float) -> np.ndarray:
        points = np.asarray(points, dtype=float)
        if not self.scale_step:
            return np.full(points.shape[:-1], float(step))
        return step * (1.0 + np.linalg.norm(points, axis=-1))

    def check_interior(self, points: np.ndarray, margin: np.ndarray) -> None:
        """非周期的有限边界处要求至少 margin 的余量"""
        points = np.asarray(points, dtype=float)
        margin = np.broadcast_to(np.asarray(margin, dtype=float), points.shape[:-1])
        for axis in range(4):
            if self.periodic[axis]:
                continue
            lo, hi = self.domain[axis]
            coord = points[..., axis]
            bad = (coord - lo < margin) | (hi - coord < margin)
            if np.any(bad):
                idx = np.argwhere(bad)[0]
                raise ChartError(
                    f"坐标卡 {self.name}: 点 {points[tuple(idx)].tolist()} 距第 {axis} 个坐标边界不足 {float(margin[tuple(idx)]):.3g}",
                )

    def quadrature_points(self, params: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        return self.parametrization(np.asarray(params, dtype=float))

    def with_metric(self, metric_fn: MetricFn, name: Optional[str] = None) -> "Chart":
        return replace(self, metric_fn=metric_fn, name=name or self.name)


def check_spd(g: np.ndarray, name: str = "") -> None:
    if not np.all(np.isfinite(g)):
        raise ChartError(f"坐标卡 {name}: 度量含有非有限值")
    if np.abs(g - np.swapaxes(g, -1, -2)).max(initial=0.0) > 1e-12 * max(np.abs(g).max(initial=0.0), 1.0):
        raise ChartError(f"坐标卡 {name}: 度量不对称")
    try:
        np.linalg.cholesky(g)
    except np.linalg.LinAlgError:
        raise ChartError(f"坐标卡 {name}: 度量不是正定的")


def radial_parametrization(params: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """[0,1]⁴ → ℝ⁴ 的球坐标参数化，r = tan(πt/2)

    Returns:
        (点, |∂x/∂p|)
    """
    t, p_alpha, p_beta, p_gamma = np.moveaxis(params, -1, 0)
    r = np.tan(0.5 * np.pi * t)
    alpha = np.pi * p_alpha
    beta = np.pi * p_beta
    gamma = 2.0 * np.pi * p_gamma
    sa, sb = np.sin(alpha), np.sin(beta)
    points = np.stack(
        [
            r * np.cos(alpha),
            r * sa * np.cos(beta),
            r * sa * sb * np.cos(gamma),
            r * sa * sb * np.sin(gamma),
        ],
        axis=-1,
    )
    dr_dt = 0.5 * np.pi * (1.0 + r * r)
    jacobian = r**3 * sa**2 * sb * dr_dt * (np.pi * np.pi * 2.0 * np.pi)
    return points, jacobian


def box_parametrization(domain: np.ndarray) -> Parametrization:
    """[0,1]⁴ → 有限盒子的仿射参数化"""
    lo = np.asarray(domain, dtype=float)[:, 0]
    width = np.asarray(domain, dtype=float)[:, 1] - lo
    volume = float(np.prod(width))

    def parametrize(params: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        points = lo + params * width
        return points, np.full(points.shape[:-1], volume)

    return parametrize


UNBOUNDED = np.array([[-np.inf, np.inf]] * 4)
