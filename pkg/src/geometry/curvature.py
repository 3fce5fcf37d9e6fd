"""
曲率算子与分解
ℛ: Λ² → Λ² 在自适应基下写成

    ℛ = [[W⁺ + s/12,  r̊      ],
         [r̊ᵀ,        W⁻ + s/12]]

|W^±|² 取 3×3 块的 Frobenius 范数平方，|r̊|² 取 4·Frobenius²(r̊)。
"""

from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np

from src.config.config import Config
from src.errors import CurvatureInputError, DocumentError
from src.geometry.bivector import Bivector6, so4_action
from src.geometry.eigen import eigenvalues_sym3

BASIS_TAG = "f-plus-minus-v1"


def _as_matrix(value, shape, name) -> np.ndarray:
    try:
        arr = np.asarray(value, dtype=float)
    except (TypeError, ValueError) as e:
        raise CurvatureInputError(f"{name} 不是实数矩阵: {e}")
    if arr.shape != shape:
        raise CurvatureInputError(f"{name} 形状应为 {shape}, 实际 {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise CurvatureInputError(f"{name} 含有非有限值")
    return arr


@dataclass(frozen=True, eq=False)
class TraceFree3:
    """对称无迹 3×3 矩阵（W⁺ 或 W⁻）"""

    matrix: np.ndarray

    def __post_init__(self):
        m = _as_matrix(self.matrix, (3, 3), "TraceFree3")
        scale = max(float(np.abs(m).max()), 1.0)
        if np.abs(m - m.T).max() > Config.relative_tol * scale:
            raise CurvatureInputError("TraceFree3 不对称")
        m = 0.5 * (m + m.T)
        # 与 CurvatureOperator 的块迹容差一致
        if abs(np.trace(m)) > max(Config.relative_tol, Config.eigen_tol) * scale:
            raise CurvatureInputError(f"TraceFree3 迹不为零: {np.trace(m):.3e}")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def zero(cls) -> "TraceFree3":
        return cls(np.zeros((3, 3)))

    def norm_sq(self) -> float:
        return float(np.sum(self.matrix * self.matrix))

    def norm(self) -> float:
        return float(np.sqrt(self.norm_sq()))

    def det(self) -> float:
        return float(np.linalg.det(self.matrix))

    def eigenvalues(self):
        return eigenvalues_sym3(self.matrix)

    def to_list(self):
        return self.matrix.tolist()


class CurvatureOperator:
    """对称 6×6 曲率算子

    构造时校验对称性与两个对角块的迹相等（均为 s/4），存储精确对称化后的矩阵。
    """

    __slots__ = ("_matrix",)

    def __init__(self, matrix, tol: Optional[float] = None):
        tol = Config.relative_tol if tol is None else tol
        m = _as_matrix(matrix, (6, 6), "曲率算子")
        scale = max(float(np.abs(m).max()), 1.0)
        asym = float(np.abs(m - m.T).max())
        if asym > tol * scale:
            raise CurvatureInputError(f"曲率算子不对称, 最大偏差 {asym:.3e}")
        m = 0.5 * (m + m.T)
        gap = float(np.trace(m[:3, :3]) - np.trace(m[3:, 3:]))
        if abs(gap) > max(tol, Config.eigen_tol) * scale:
            raise CurvatureInputError(f"对角块迹不相等, 差值 {gap:.3e}")
        self._matrix = m
        self._matrix.setflags(write=False)

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def block_plus(self) -> np.ndarray:
        return self._matrix[:3, :3]

    @property
    def block_minus(self) -> np.ndarray:
        return self._matrix[3:, 3:]

    @property
    def block_mixed(self) -> np.ndarray:
        return self._matrix[:3, 3:]

    @classmethod
    def identity(cls) -> "CurvatureOperator":
        """单位圆 S⁴ 的曲率算子"""
        return cls(np.eye(6))

    def apply(self, phi: Bivector6) -> Bivector6:
        return Bivector6(self._matrix @ phi.components)

    def quadratic(self, phi: Bivector6) -> float:
        return float(phi.components @ self._matrix @ phi.components)

    def conjugate(self, rotation: np.ndarray) -> "CurvatureOperator":
        """Q ∈ SO(4) 作用后的算子 ρ(Q) ℛ ρ(Q)ᵀ"""
        rho = so4_action(rotation)
        return CurvatureOperator(rho @ self._matrix @ rho.T)

    def to_document(self) -> Dict:
        return {"basis": BASIS_TAG, "matrix": self._matrix.tolist()}

    @classmethod
    def from_document(cls, doc: Dict) -> "CurvatureOperator":
        if not isinstance(doc, dict) or "matrix" not in doc:
            raise DocumentError("曲率算子文档缺少 matrix 字段")
        basis = doc.get("basis", BASIS_TAG)
        if basis != BASIS_TAG:
            raise DocumentError(f"不支持的基约定: {basis}")
        return cls(doc["matrix"])

    def __repr__(self) -> str:
        return f"CurvatureOperator(\n{np.array2string(self._matrix, precision=6)})"


@dataclass(frozen=True, eq=False)
class CurvatureDecomposition:
    w_plus: TraceFree3
    w_minus: TraceFree3
    mixed: np.ndarray
    scalar: float

    def __post_init__(self):
        object.__setattr__(self, "mixed", _as_matrix(self.mixed, (3, 3), "mixed"))
        object.__setattr__(self, "scalar", float(self.scalar))

    def is_einstein(self, tol: Optional[float] = None) -> bool:
        """r̊ 在容差内为零"""
        tol = Config.eigen_tol if tol is None else tol
        scale = max(abs(self.scalar), self.w_plus.norm(), self.w_minus.norm(), 1.0)
        return float(np.abs(self.mixed).max()) <= tol * scale

    def require_einstein(self, tol: Optional[float] = None) -> None:
        if not self.is_einstein(tol):
            raise CurvatureInputError(
                f"需要 Einstein 输入, 但 r̊ 最大分量为 {np.abs(self.mixed).max():.3e}"
            )

    @property
    def w_plus_norm_sq(self) -> float:
        return self.w_plus.norm_sq()

    @property
    def w_minus_norm_sq(self) -> float:
        return self.w_minus.norm_sq()

    @property
    def traceless_ricci_norm_sq(self) -> float:
        return 4.0 * float(np.sum(self.mixed * self.mixed))

    def reverse_orientation(self) -> "CurvatureDecomposition":
        """反转定向：交换 W⁺ 与 W⁻，混合块转置"""
        return CurvatureDecomposition(
            w_plus=self.w_minus,
            w_minus=self.w_plus,
            mixed=self.mixed.T.copy(),
            scalar=self.scalar,
        )

    def to_dict(self) -> Dict:
        return {
            "w_plus": self.w_plus.to_list(),
            "w_minus": self.w_minus.to_list(),
            "mixed": self.mixed.tolist(),
            "scalar": self.scalar,
        }

    @classmethod
    def from_dict(cls, doc: Dict) -> "CurvatureDecomposition":
        missing = {"w_plus", "w_minus", "mixed", "scalar"} - set(doc or {})
        if missing:
            raise DocumentError(f"分解文档缺少字段: {sorted(missing)}")
        return cls(
            w_plus=TraceFree3(doc["w_plus"]),
            w_minus=TraceFree3(doc["w_minus"]),
            mixed=doc["mixed"],
            scalar=doc["scalar"],
        )


def decompose(r: CurvatureOperator) -> CurvatureDecomposition:
    """s = 2(tr A + tr C)，W⁺ = A - s/12，W⁻ = C - s/12，r̊ = B"""
    a, c, b = r.block_plus, r.block_minus, r.block_mixed
    s = 2.0 * (np.trace(a) + np.trace(c))
    # 两块迹只在容差内相等，减去 s/12 使 reconstruct 精确还原 A、C
    shift = s / 12.0 * np.eye(3)
    w_plus = a - shift
    w_minus = c - shift
    return CurvatureDecomposition(
        w_plus=TraceFree3(w_plus),
        w_minus=TraceFree3(w_minus),
        mixed=b.copy(),
        scalar=s,
    )


def reconstruct(d: CurvatureDecomposition) -> CurvatureOperator:
    shift = d.scalar / 12.0 * np.eye(3)
    m = np.block(
        [
            [d.w_plus.matrix + shift, d.mixed],
            [d.mixed.T, d.w_minus.matrix + shift],
        ]
    )
    return CurvatureOperator(m)


def decompose_batch(matrices: np.ndarray) -> Dict[str, np.ndarray]:
    """批量分解 (N, 6, 6) 对称矩阵，不做逐个校验

    Returns:
        w_plus, w_minus, mixed 为 (N, 3, 3)，scalar 为 (N,)
    """
    m = np.asarray(matrices, dtype=float)
    m = 0.5 * (m + np.swapaxes(m, -1, -2))
    a, c, b = m[..., :3, :3], m[..., 3:, 3:], m[..., :3, 3:]
    tr_a = np.trace(a, axis1=-2, axis2=-1)
    tr_c = np.trace(c, axis1=-2, axis2=-1)
    eye = np.eye(3)
    return {
        "w_plus": a - ((tr_a + tr_c) / 6.0)[..., None, None] * eye,
        "w_minus": c - ((tr_a + tr_c) / 6.0)[..., None, None] * eye,
        "mixed": b,
        "scalar": 2.0 * (tr_a + tr_c),
    }


def reconstruct_batch(parts: Dict[str, np.ndarray]) -> np.ndarray:
    """decompose_batch 的逆，返回 (N, 6, 6)"""
    shift = (parts["scalar"] / 12.0)[..., None, None] * np.eye(3)
    top = np.concatenate([parts["w_plus"] + shift, parts["mixed"]], axis=-1)
    bottom = np.concatenate([np.swapaxes(parts["mixed"], -1, -2), parts["w_minus"] + shift], axis=-1)
    return np.concatenate([top, bottom], axis=-2)


def curvature_terms_batch(matrices: np.ndarray) -> Dict[str, np.ndarray]:
    """逐点曲率平方项：|W⁺|²、|W⁻|²、s、s²、|r̊|²"""
    parts = decompose_batch(matrices)
    scalar = parts["scalar"]
    return {
        "w_plus_sq": np.sum(parts["w_plus"] ** 2, axis=(-2, -1)),
        "w_minus_sq": np.sum(parts["w_minus"] ** 2, axis=(-2, -1)),
        "scalar": scalar,
        "scalar_sq": scalar * scalar,
        "ricci0_sq": 4.0 * np.sum(parts["mixed"] ** 2, axis=(-2, -1)),
    }


def integrands_batch(matrices: np.ndarray):
    """批量 Gauss-Bonnet 与符号差被积函数，返回 (gb, sig)"""
    t = curvature_terms_batch(matrices)
    gb = (
        t["w_plus_sq"] + t["w_minus_sq"] + t["scalar_sq"] / 24.0 - t["ricci0_sq"] / 2.0
    ) / (8.0 * np.pi**2)
    sig = (t["w_plus_sq"] - t["w_minus_sq"]) / (12.0 * np.pi**2)
    return gb, sig
