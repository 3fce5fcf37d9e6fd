"""
模型目录
S⁴(a)、Fubini-Study ℂP²、S²(a)×S²(b)、平坦 T⁴ 及其位似，附带闭式参考数据。

坐标卡约定：
- S⁴：球极投影，g = 4a²/(1+|x|²)² δ，缺一个点
- ℂP²：仿射坐标 z₁ = x₀ + i x₁，z₂ = x₂ + i x₃，Kähler 势 log(1+|z|²)，
  坐标顺序 (x₁,y₁,x₂,y₂) 使 Kähler 形式自对偶，缺一条射影直线
- S²×S²：(θ₁, φ₁, θ₂, φ₂) 球面角，缺极点与经线
- T⁴：[0, side]⁴ 上的单位矩阵
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from src.enums.model_name import ModelName, Models
from src.errors import ChartError
from src.models.chart import UNBOUNDED, Chart, box_parametrization, radial_parametrization

# (x1, x2, y1, y2) → (x1, y1, x2, y2)
_COMPLEX_ORDER = [0, 2, 1, 3]


class ModelReference(BaseModel):
    """闭式参考数据；谱按升序排列"""

    model_config = ConfigDict(frozen=True)

    euler_characteristic: int
    signature: int
    volume: float
    scalar: float
    # 非 Einstein 时为 None
    einstein_constant: Optional[float]
    w_plus_spectrum: Tuple[float, float, float]
    w_minus_spectrum: Tuple[float, float, float]
    sectional_range: Tuple[float, float]

    def consistency_errors(self, tol: float = 1e-12) -> List[str]:
        errors = []
        scale = max(abs(self.scalar), 1.0)
        if self.einstein_constant is not None and abs(self.scalar - 4.0 * self.einstein_constant) > tol * scale:
            errors.append(f"s = {self.scalar} 与 4λ = {4.0 * self.einstein_constant} 不一致")
        for label, spectrum in (("W⁺", self.w_plus_spectrum), ("W⁻", self.w_minus_spectrum)):
            if abs(sum(spectrum)) > tol * scale:
                errors.append(f"{label} 谱之和不为零: {spectrum}")
            if list(spectrum) != sorted(spectrum):
                errors.append(f"{label} 谱未按升序排列: {spectrum}")
        if self.sectional_range[0] > self.sectional_range[1]:
            errors.append(f"截面曲率范围颠倒: {self.sectional_range}")
        if self.volume <= 0:
            errors.append(f"体积必须为正: {self.volume}")
        return errors

    def scaled(self, c: float) -> "ModelReference":
        """度量乘以 c 后的参考数据"""
        return ModelReference(
            euler_characteristic=self.euler_characteristic,
            signature=self.signature,
            volume=self.volume * c * c,
            scalar=self.scalar / c,
            einstein_constant=None if self.einstein_constant is None else self.einstein_constant / c,
            w_plus_spectrum=tuple(x / c for x in self.w_plus_spectrum),
            w_minus_spectrum=tuple(x / c for x in self.w_minus_spectrum),
            sectional_range=(self.sectional_range[0] / c, self.sectional_range[1] / c),
        )


@dataclass(frozen=True, eq=False)
class ModelManifold:
    name: str
    key: str
    charts: Tuple[Chart, ...]
    reference: ModelReference
    parameters: Dict[str, float] = field(default_factory=dict)

    @property
    def chart(self) -> Chart:
        return self.charts[0]

    def label(self) -> str:
        if not self.parameters:
            return self.name
        args = ", ".join(f"{k}={v:g}" for k, v in self.parameters.items())
        return f"{self.name}({args})"


def _require_positive(**values: float) -> None:
    for name, value in values.items():
        if not (value > 0 and math.isfinite(value)):
            raise ChartError(f"模型参数 {name} 必须为正有限数, 实际 {value}")


def _conformally_flat(factor_fn):
    def metric(x: np.ndarray) -> np.ndarray:
        return factor_fn(x)[..., None, None] * np.eye(4)

    return metric


def round_sphere(radius: float = 1.0) -> ModelManifold:
    _require_positive(radius=radius)
    a2 = radius * radius
    chart = Chart(
        name=f"S4-stereographic(a={radius:g})",
        domain=UNBOUNDED,
        metric_fn=_conformally_flat(lambda x: 4.0 * a2 / (1.0 + np.sum(x * x, axis=-1)) ** 2),
        measure_zero_excluded="北极点（投影中心）",
        parametrization=radial_parametrization,
        reference_point=np.zeros(4),
        scale_step=True,
    )
    k = 1.0 / a2
    reference = ModelReference(
        euler_characteristic=2,
        signature=0,
        volume=8.0 * math.pi**2 * a2 * a2 / 3.0,
        scalar=12.0 * k,
        einstein_constant=3.0 * k,
        w_plus_spectrum=(0.0, 0.0, 0.0),
        w_minus_spectrum=(0.0, 0.0, 0.0),
        sectional_range=(k, k),
    )
    return ModelManifold("round_sphere", ModelName.S4.value.key, (chart,), reference, {"radius": radius})


def fubini_study_metric(x: np.ndarray) -> np.ndarray:
    """仿射坐标下的实度量，坐标顺序 (x₁, y₁, x₂, y₂)"""
    z = np.stack([x[..., 0] + 1j * x[..., 1], x[..., 2] + 1j * x[..., 3]], axis=-1)
    n = 1.0 + np.sum(np.abs(z) ** 2, axis=-1)
    h = (n[..., None, None] * np.eye(2) - z[..., :, None] * np.conjugate(z[..., None, :])) / (n**2)[..., None, None]
    p, q = h.real, h.imag
    real = np.concatenate(
        [np.concatenate([p, -q], axis=-1), np.concatenate([q, p], axis=-1)],
        axis=-2,
    )
    return real[..., _COMPLEX_ORDER, :][..., :, _COMPLEX_ORDER]


def fubini_study() -> ModelManifold:
    """全体积 π²/2、截面曲率 K ∈ [1, 4] 的归一化"""
    chart = Chart(
        name="CP2-affine",
        domain=UNBOUNDED,
        metric_fn=fubini_study_metric,
        measure_zero_excluded="无穷远直线 ℂP¹",
        parametrization=radial_parametrization,
        reference_point=np.zeros(4),
        scale_step=True,
    )
    reference = ModelReference(
        euler_characteristic=3,
        signature=1,
        volume=math.pi**2 / 2.0,
        scalar=24.0,
        einstein_constant=6.0,
        w_plus_spectrum=(-2.0, -2.0, 4.0),
        w_minus_spectrum=(0.0, 0.0, 0.0),
        sectional_range=(1.0, 4.0),
    )
    return ModelManifold("fubini_study", ModelName.CP2.value.key, (chart,), reference)


def product_spheres(a: float = 1.0, b: float = 1.0) -> ModelManifold:
    _require_positive(a=a, b=b)

    def metric(x: np.ndarray) -> np.ndarray:
        g = np.zeros(x.shape[:-1] + (4, 4))
        g[..., 0, 0] = a * a
        g[..., 1, 1] = a * a * np.sin(x[..., 0]) ** 2
        g[..., 2, 2] = b * b
        g[..., 3, 3] = b * b * np.sin(x[..., 2]) ** 2
        return g

    domain = np.array([[0.0, math.pi], [0.0, 2.0 * math.pi], [0.0, math.pi], [0.0, 2.0 * math.pi]])
    chart = Chart(
        name=f"S2xS2-angles(a={a:g},b={b:g})",
        domain=domain,
        metric_fn=metric,
        measure_zero_excluded="两个因子的极点与 φ = 0 经线",
        parametrization=box_parametrization(domain),
        reference_point=np.array([math.pi / 2, math.pi, math.pi / 2, math.pi]),
        periodic=(False, True, False, True),
    )
    k1, k2 = 1.0 / (a * a), 1.0 / (b * b)
    mean = 0.5 * (k1 + k2)
    spectrum = (-mean / 3.0, -mean / 3.0, 2.0 * mean / 3.0)
    reference = ModelReference(
        euler_characteristic=4,
        signature=0,
        volume=16.0 * math.pi**2 * a * a * b * b,
        scalar=2.0 * (k1 + k2),
        einstein_constant=k1 if a == b else None,
        w_plus_spectrum=spectrum,
        w_minus_spectrum=spectrum,
        sectional_range=(0.0, max(k1, k2)),
    )
    return ModelManifold("product_spheres", ModelName.S2XS2.value.key, (chart,), reference, {"a": a, "b": b})


def flat_torus(side: float = 1.0) -> ModelManifold:
    _require_positive(side=side)
    domain = np.array([[0.0, side]] * 4)
    chart = Chart(
        name=f"T4-identity(side={side:g})",
        domain=domain,
        metric_fn=lambda x: np.broadcast_to(np.eye(4), x.shape[:-1] + (4, 4)).copy(),
        measure_zero_excluded="基本区域的边界",
        parametrization=box_parametrization(domain),
        reference_point=np.full(4, side / 2.0),
        periodic=(True, True, True, True),
    )
    reference = ModelReference(
        euler_characteristic=0,
        signature=0,
        volume=side**4,
        scalar=0.0,
        einstein_constant=0.0,
        w_plus_spectrum=(0.0, 0.0, 0.0),
        w_minus_spectrum=(0.0, 0.0, 0.0),
        sectional_range=(0.0, 0.0),
    )
    return ModelManifold("flat_torus", ModelName.T4.value.key, (chart,), reference, {"side": side})


_BUILDERS = {
    ModelName.S4: round_sphere,
    ModelName.CP2: fubini_study,
    ModelName.S2XS2: product_spheres,
    ModelName.T4: flat_torus,
}


def catalog() -> List[ModelManifold]:
    """默认参数下的四个模型"""
    return [builder(**item.value.defaults) for item, builder in _BUILDERS.items()]


def get_model(key: str, **params: float) -> ModelManifold:
    """按命令行名称构造模型，未给出的参数取默认值"""
    item = Models.get(key)
    unknown = set(params) - set(item.value.defaults)
    if unknown:
        raise ChartError(f"模型 {key} 不接受参数 {sorted(unknown)}")
    return _BUILDERS[item](**{**item.value.defaults, **params})


def homothety(model: ModelManifold, c: float) -> ModelManifold:
    """度量乘以常数 c > 0"""
    _require_positive(c=c)
    base = model.chart
    metric_fn = base.metric_fn
    chart = base.with_metric(lambda x: c * metric_fn(x), name=f"{base.name}*{c:g}")
    params = {**model.parameters, "homothety": c}
    return ModelManifold(model.name, model.key, (chart,), model.reference.scaled(c), params)


def reference_operator(model: ModelManifold) -> np.ndarray:
    """参考点处正交标架下的闭式曲率算子（6×6）

    S²×S² 的曲率平面是 e₀∧e₁ 与 e₂∧e₃，f₁^± = (e₀∧e₁ ± e₂∧e₃)/√2 上
    A = C = diag((K₁+K₂)/2, 0, 0)，B = diag((K₁-K₂)/2, 0, 0)。
    """
    c = model.parameters.get("homothety", 1.0)
    m = np.zeros((6, 6))
    if model.key == ModelName.S4.value.key:
        m = np.eye(6) / model.parameters["radius"] ** 2
    elif model.key == ModelName.CP2.value.key:
        m[0, 0] = 6.0
        m[3:, 3:] = 2.0 * np.eye(3)
    elif model.key == ModelName.S2XS2.value.key:
        k1 = 1.0 / model.parameters["a"] ** 2
        k2 = 1.0 / model.parameters["b"] ** 2
        m[0, 0] = m[3, 3] = 0.5 * (k1 + k2)
        m[0, 3] = m[3, 0] = 0.5 * (k1 - k2)
    return m / c
