"""
二重向量模块
固定定向正交标架 e⁰..e³ 下 Λ² 的自适应基：

    f₁^± = (e⁰∧e¹ ± e²∧e³)/√2
    f₂^± = (e⁰∧e² ± e³∧e¹)/√2
    f₃^± = (e⁰∧e³ ± e¹∧e²)/√2

分量顺序 (f₁⁺, f₂⁺, f₃⁺, f₁⁻, f₂⁻, f₃⁻)，Hodge 星在此基下为 diag(1,1,1,-1,-1,-1)。
二形式的内积取 ⟨φ,ψ⟩ = ½ φ_ab ψ_ab，使 e⁰∧e¹ 为单位长度。
"""

import itertools
from dataclasses import dataclass
from typing import List

import numpy as np

from src.errors import CurvatureInputError

SQRT2 = np.sqrt(2.0)

# 每个基元素按 (a, b, c, d) 表示 (e^a∧e^b ± e^c∧e^d)/√2
_PAIRS = ((0, 1, 2, 3), (0, 2, 3, 1), (0, 3, 1, 2))


def _wedge(a: int, b: int) -> np.ndarray:
    form = np.zeros((4, 4))
    form[a, b] = 1.0
    form[b, a] = -1.0
    return form


def _basis_forms() -> np.ndarray:
    forms = []
    for sign in (1.0, -1.0):
        for a, b, c, d in _PAIRS:
            forms.append((_wedge(a, b) + sign * _wedge(c, d)) / SQRT2)
    return np.array(forms)


# (6, 4, 4)：基二形式的反对称分量矩阵
BASIS_FORMS = _basis_forms()
HODGE_DIAGONAL = np.array([1.0, 1.0, 1.0, -1.0, -1.0, -1.0])


def levi_civita4() -> np.ndarray:
    eps = np.zeros((4, 4, 4, 4))
    for perm in itertools.permutations(range(4)):
        inversions = sum(
            1 for i in range(4) for j in range(i + 1, 4) if perm[i] > perm[j]
        )
        eps[perm] = -1.0 if inversions % 2 else 1.0
    return eps


LEVI_CIVITA = levi_civita4()


def hodge_star_form(form: np.ndarray) -> np.ndarray:
    """分量形式的 Hodge 星：(⋆φ)_ab = ½ ε_abcd φ_cd"""
    return 0.5 * np.einsum("abcd,cd->ab", LEVI_CIVITA, form)


@dataclass(frozen=True, eq=False)
class Bivector6:
    """Λ² 中一点处的元素，自适应基下的 6 个实分量"""

    components: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.components, dtype=float).reshape(-1)
        if arr.shape != (6,):
            raise CurvatureInputError(f"二重向量需要 6 个分量, 实际 {arr.size}")
        object.__setattr__(self, "components", arr)

    @classmethod
    def from_form(cls, form: np.ndarray) -> "Bivector6":
        """由 4×4 反对称分量矩阵构造"""
        form = np.asarray(form, dtype=float)
        return cls(0.5 * np.einsum("Iab,ab->I", BASIS_FORMS, form))

    @classmethod
    def from_vectors(cls, e: np.ndarray, f: np.ndarray) -> "Bivector6":
        """e∧f 的坐标像"""
        e = np.asarray(e, dtype=float)
        f = np.asarray(f, dtype=float)
        return cls.from_form(np.outer(e, f) - np.outer(f, e))

    @classmethod
    def from_halves(cls, u: np.ndarray, v: np.ndarray) -> "Bivector6":
        return cls(np.concatenate([np.asarray(u, float), np.asarray(v, float)]))

    def to_form(self) -> np.ndarray:
        return np.einsum("I,Iab->ab", self.components, BASIS_FORMS)

    @property
    def plus(self) -> np.ndarray:
        return self.components[:3]

    @property
    def minus(self) -> np.ndarray:
        return self.components[3:]

    def norm_sq(self) -> float:
        return float(self.components @ self.components)

    def inner(self, other: "Bivector6") -> float:
        return float(self.components @ other.components)

    def is_simple(self, tol: float = 1e-10) -> bool:
        """φ∧φ = 0 ⇔ |φ⁺|² = |φ⁻|²"""
        gap = abs(self.plus @ self.plus - self.minus @ self.minus)
        return gap <= tol * max(self.norm_sq(), 1.0)

    def is_unit_simple(self, tol: float = 1e-10) -> bool:
        return (
            abs(self.plus @ self.plus - 0.5) <= tol
            and abs(self.minus @ self.minus - 0.5) <= tol
        )

    def __repr__(self) -> str:
        return f"Bivector6({np.array2string(self.components, precision=6)})"


def adapted_basis() -> List[Bivector6]:
    """固定的定向正交基；前三个为 ⋆ 的 +1 特征向量，后三个为 -1 特征向量"""
    return [Bivector6(row) for row in np.eye(6)]


def hodge_star(phi: Bivector6) -> Bivector6:
    """Hodge 星：保持前三个分量，后三个取反；⋆∘⋆ = id"""
    return Bivector6(HODGE_DIAGONAL * phi.components)


def so4_action(rotation: np.ndarray) -> np.ndarray:
    """Q ∈ SO(4) 在 Λ² 上作用的 6×6 矩阵（自适应基下块对角）

    Args:
        rotation: 4×4 正交矩阵，行列式为 +1

    Returns:
        ρ(Q)，满足 ρ(Q)_IJ = ⟨f_I, Q f_J Qᵀ⟩
    """
    q = np.asarray(rotation, dtype=float)
    if q.shape != (4, 4):
        raise CurvatureInputError("旋转矩阵必须是 4×4")
    if not np.allclose(q @ q.T, np.eye(4), atol=1e-10) or np.linalg.det(q) < 0:
        raise CurvatureInputError("旋转矩阵必须属于 SO(4)")
    moved = np.einsum("ac,Jcd,bd->Jab", q, BASIS_FORMS, q)
    return 0.5 * np.einsum("Iab,Jab->IJ", BASIS_FORMS, moved)
