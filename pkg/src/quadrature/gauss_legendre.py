"""
坐标卡参数空间 [0,1]⁴ 上的乘积 Gauss-Legendre 求积
"""

from enum import Enum
from typing import Optional, Tuple

import numpy as np
from numpy.polynomial.legendre import leggauss
from pydantic import BaseModel, ConfigDict, field_validator

from src.config.config import Config


class QuadratureScheme(Enum):
    Product = "product"
    # 齐性捷径：参考点处的逐点值 × 体积
    Homogeneous = "homogeneous"


class QuadratureSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    scheme: QuadratureScheme = QuadratureScheme.Product
    orders: Tuple[int, int, int, int] = (12, 12, 12, 12)
    # 参数盒两端各截去的宽度；0 表示积分整个盒子
    margin: float = 0.0

    @field_validator("orders")
    @classmethod
    def _orders_at_least_two(cls, value):
        if any(n < 2 for n in value):
            raise ValueError(f"每个坐标轴的求积阶数至少为 2: {value}")
        return value

    @field_validator("margin")
    @classmethod
    def _margin_range(cls, value):
        if not 0.0 <= value < 0.5:
            raise ValueError(f"margin 必须在 [0, 0.5) 内: {value}")
        return value

    @classmethod
    def from_order(cls, order: Optional[int] = None, scheme: QuadratureScheme = QuadratureScheme.Product) -> "QuadratureSpec":
        n = Config.quad_order if order is None else order
        return cls(scheme=scheme, orders=(n, n, n, n))

    def doubled(self) -> "QuadratureSpec":
        return self.model_copy(update={"orders": tuple(2 * n for n in self.orders)})

    @property
    def node_count(self) -> int:
        return int(np.prod(self.orders))

    def nodes(self) -> Tuple[np.ndarray, np.ndarray]:
        """返回 (参数点 (N, 4), 权重 (N,))，节点按 C 顺序固定排列"""
        axes, weights = [], []
        lo, width = self.margin, 1.0 - 2.0 * self.margin
        for n in self.orders:
            x, w = leggauss(n)
            axes.append(lo + 0.5 * width * (x + 1.0))
            weights.append(0.5 * width * w)
        grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, 4)
        wgrid = np.einsum("i,j,k,l->ijkl", *weights).reshape(-1)
        return grid, wgrid
