"""
实向量与 S₋⊗S₊ 的焊接映射

    v_{A'A} = Σ_μ v^μ σ_μ,   σ = (I, -iσ₁, -iσ₂, -iσ₃)/√2

该映射的像在每个指标的四元数共轭 ĉ 下不变（"实元素"），且 v†v = ½|v|² I，
故旋量范数 Σ|v_{A'A}|² 等于欧氏范数 |v|²。
"""

from dataclasses import dataclass

import numpy as np

from src.errors import SpinorInputError
from src.spinor.tensor import SpinorTensor, quaternionic_conjugate_array, raise_all

_PAULI = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)

# (4, 2, 2)
SOLDERING = np.array([_PAULI[0], -1j * _PAULI[1], -1j * _PAULI[2], -1j * _PAULI[3]]) / np.sqrt(2.0)


def solder(vectors: np.ndarray) -> np.ndarray:
    """(..., 4) 实向量 → (..., 2, 2) 的 v_{A'A}"""
    return np.tensordot(np.asarray(vectors, dtype=float), SOLDERING, axes=([-1], [0]))


@dataclass(frozen=True, eq=False)
class HermitianVector:
    """实 4 维向量及其旋量形式 v_{A'A}"""

    components: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.components, dtype=float).reshape(-1)
        if arr.shape != (4,):
            raise SpinorInputError(f"需要 4 个实分量, 实际 {arr.size}")
        object.__setattr__(self, "components", arr)

    @property
    def matrix(self) -> np.ndarray:
        return solder(self.components)

    @property
    def tensor(self) -> SpinorTensor:
        return SpinorTensor(1, 1, self.matrix)

    def euclidean_norm_sq(self) -> float:
        return float(self.components @ self.components)

    def is_real(self, tol: float = 1e-14) -> bool:
        """v_{A'A} 在双指标四元数共轭下不变"""
        m = self.matrix
        return bool(np.abs(quaternionic_conjugate_array(m) - m).max() <= tol * max(1.0, np.abs(m).max()))


def epsilon_trace_identity_residual(v) -> float:
    """v^{A'A} v_{A'B} = ½ (v^{C'C} v_{C'C}) δ^A_B 的最大偏差

    对任意 2×2 矩阵成立（X_{AB} 关于 A、B 反对称）。
    """
    m = v.matrix if isinstance(v, HermitianVector) else np.asarray(getattr(v, "entries", v))
    raised = raise_all(m)
    x = raised.T @ m
    trace = np.trace(x)
    return float(np.abs(x - 0.5 * trace * np.eye(2)).max())
