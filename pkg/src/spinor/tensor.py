"""
二分量旋量张量
分量数组的轴按 (带撇指标..., 不带撇指标...) 排列，每个指标取 0/1。
ε 约定：ε₀₁ = ε⁰¹ = 1，升指标 ξ^A = ε^{AB} ξ_B，降指标 ξ_B = ξ^A ε_{AB}。

浮点模式分量为 complex128；精确模式分量为 Fraction 的 object 数组，
运算只用加减乘与共轭，结果保持精确。
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence

import numpy as np

from src.errors import DocumentError, SpinorInputError

# 沿一个指标的 (取分量顺序, 符号)
_RAISE = ([1, 0], [1, -1])
_LOWER = ([1, 0], [-1, 1])


def _along(arr: np.ndarray, axis: int, op) -> np.ndarray:
    order, signs = op
    shape = [1] * arr.ndim
    shape[axis] = 2
    return np.take(arr, order, axis=axis) * np.array(signs).reshape(shape)


@dataclass(frozen=True, eq=False)
class SpinorTensor:
    primed_rank: int
    unprimed_rank: int
    entries: np.ndarray
    symmetric_unprimed: bool = False

    def __post_init__(self):
        if self.primed_rank < 0 or self.unprimed_rank < 0:
            raise SpinorInputError("指标个数不能为负")
        arr = np.asarray(self.entries)
        if arr.dtype != object:
            arr = arr.astype(complex)
        rank = self.primed_rank + self.unprimed_rank
        if arr.shape != (2,) * rank:
            raise SpinorInputError(f"秩 ({self.primed_rank},{self.unprimed_rank}) 需要形状 {(2,) * rank}, 实际 {arr.shape}")
        object.__setattr__(self, "entries", arr)
        if self.symmetric_unprimed and not is_symmetric_exact(arr, self.unprimed_rank):
            raise SpinorInputError("标记为对称的张量在不带撇指标置换下不不变")

    @property
    def rank(self) -> int:
        return self.primed_rank + self.unprimed_rank

    @property
    def exact(self) -> bool:
        return self.entries.dtype == object

    @classmethod
    def zeros(cls, primed_rank: int, unprimed_rank: int) -> "SpinorTensor":
        return cls(primed_rank, unprimed_rank, np.zeros((2,) * (primed_rank + unprimed_rank), complex))

    @classmethod
    def basis_element(cls, primed_rank: int, unprimed_rank: int, index: Sequence[int]) -> "SpinorTensor":
        entries = np.zeros((2,) * (primed_rank + unprimed_rank), complex)
        entries[tuple(index)] = 1.0
        return cls(primed_rank, unprimed_rank, entries)

    @classmethod
    def from_exact(cls, primed_rank: int, unprimed_rank: int, values, symmetric_unprimed: bool = False) -> "SpinorTensor":
        """由有理数（或可转成 Fraction 的值）构造精确张量"""
        arr = np.asarray(values, dtype=object)
        flat = [Fraction(x) for x in arr.reshape(-1)]
        exact = np.empty(len(flat), dtype=object)
        exact[:] = flat
        return cls(primed_rank, unprimed_rank, exact.reshape(arr.shape), symmetric_unprimed)

    def scaled(self, factor) -> "SpinorTensor":
        return SpinorTensor(self.primed_rank, self.unprimed_rank, self.entries * factor, self.symmetric_unprimed)

    def is_zero(self) -> bool:
        return not np.any(self.entries != 0)

    def to_document(self) -> Dict:
        """JSON 文档：分量按 C 顺序展平为 [实部, 虚部] 对"""
        if self.exact:
            pairs = [[str(x), "0"] for x in self.entries.reshape(-1)]
        else:
            pairs = [[float(z.real), float(z.imag)] for z in self.entries.reshape(-1)]
        return {
            "primed_rank": self.primed_rank,
            "unprimed_rank": self.unprimed_rank,
            "symmetric_unprimed": self.symmetric_unprimed,
            "entries": pairs,
        }

    @classmethod
    def from_document(cls, doc: Dict) -> "SpinorTensor":
        try:
            p, q = int(doc["primed_rank"]), int(doc["unprimed_rank"])
            pairs = doc["entries"]
            if pairs and isinstance(pairs[0][0], str):
                return cls.from_exact(
                    p, q, np.array([Fraction(re) for re, _ in pairs], dtype=object).reshape((2,) * (p + q)),
                    bool(doc.get("symmetric_unprimed", False)),
                )
            values = np.array([complex(re, im) for re, im in pairs]).reshape((2,) * (p + q))
        except (KeyError, TypeError, ValueError) as e:
            raise DocumentError(f"旋量张量文档格式错误: {e}")
        return cls(p, q, values, bool(doc.get("symmetric_unprimed", False)))


def is_symmetric_exact(arr: np.ndarray, q: int) -> bool:
    lead = arr.ndim - q
    for k in range(q - 1):
        axes = list(range(arr.ndim))
        axes[lead + k], axes[lead + k + 1] = axes[lead + k + 1], axes[lead + k]
        if not np.array_equal(arr, np.transpose(arr, axes)):
            return False
    return True


def is_symmetric_within(t: SpinorTensor, tol: float) -> bool:
    """浮点意义下的对称性（相邻指标交换的最大偏差不超过 tol·max|T|）"""
    arr = t.entries
    lead = arr.ndim - t.unprimed_rank
    scale = max(float(np.abs(arr).max()) if arr.size else 0.0, 1e-300)
    for k in range(t.unprimed_rank - 1):
        axes = list(range(arr.ndim))
        axes[lead + k], axes[lead + k + 1] = axes[lead + k + 1], axes[lead + k]
        if float(np.abs(arr - np.transpose(arr, axes)).max()) > tol * scale:
            return False
    return True


def symmetrize_last(arr: np.ndarray, q: int, canonical: bool = True) -> np.ndarray:
    """对最后 q 个轴做全置换平均

    canonical 为真时再按排序后的多重指标回填，使输出在置换下逐位相等。
    """
    if q <= 1:
        return arr.copy()
    lead = arr.ndim - q
    prefix = list(range(lead))
    total = None
    for perm in itertools.permutations(range(q)):
        moved = np.transpose(arr, prefix + [lead + p for p in perm])
        total = moved if total is None else total + moved
    avg = total / math.factorial(q)
    return canonicalize_symmetric(avg, q) if canonical else avg


def canonicalize_symmetric(arr: np.ndarray, q: int) -> np.ndarray:
    """每个分量取其最后 q 个指标排序后的位置上的值"""
    lead = arr.ndim - q
    grid = np.indices(arr.shape)
    tail = np.sort(grid[lead:], axis=0)
    return arr[tuple(grid[:lead]) + tuple(tail)]


def symmetrize_unprimed(t: SpinorTensor) -> SpinorTensor:
    """不带撇指标全对称化；幂等"""
    return SpinorTensor(
        t.primed_rank,
        t.unprimed_rank,
        symmetrize_last(t.entries, t.unprimed_rank),
        symmetric_unprimed=True,
    )


def raise_index(t: SpinorTensor, axis: int) -> SpinorTensor:
    return SpinorTensor(t.primed_rank, t.unprimed_rank, _along(t.entries, axis, _RAISE))


def lower_index(t: SpinorTensor, axis: int) -> SpinorTensor:
    return SpinorTensor(t.primed_rank, t.unprimed_rank, _along(t.entries, axis, _LOWER))


def raise_all(arr: np.ndarray, first_axis: int = 0) -> np.ndarray:
    for axis in range(first_axis, arr.ndim):
        arr = _along(arr, axis, _RAISE)
    return arr


def quaternionic_conjugate_array(arr: np.ndarray, first_axis: int = 0) -> np.ndarray:
    """每个指标上 ĉ(ξ)₀ = -conj(ξ₁)，ĉ(ξ)₁ = conj(ξ₀)"""
    out = np.conjugate(arr)
    for axis in range(first_axis, arr.ndim):
        out = _along(out, axis, _LOWER)
    return out


def quaternionic_conjugate(t: SpinorTensor) -> SpinorTensor:
    return SpinorTensor(t.primed_rank, t.unprimed_rank, quaternionic_conjugate_array(t.entries), t.symmetric_unprimed)


def tensor_product(s: SpinorTensor, t: SpinorTensor) -> SpinorTensor:
    """(S⊗T)，指标顺序整理为 (S 带撇, T 带撇, S 不带撇, T 不带撇)"""
    outer = np.multiply.outer(s.entries, t.entries)
    ps, qs, pt = s.primed_rank, s.unprimed_rank, t.primed_rank
    n = outer.ndim
    axes: List[int] = (
        list(range(ps))
        + list(range(ps + qs, ps + qs + pt))
        + list(range(ps, ps + qs))
        + list(range(ps + qs + pt, n))
    )
    return SpinorTensor(ps + pt, qs + t.unprimed_rank, np.transpose(outer, axes))


def epsilon_contract(s: SpinorTensor, t: SpinorTensor):
    """S 全部指标用 ε 升起后与 T 完全缩并"""
    if (s.primed_rank, s.unprimed_rank) != (t.primed_rank, t.unprimed_rank):
        raise SpinorInputError("缩并的两个张量秩不一致")
    return np.sum(raise_all(s.entries) * t.entries)


def norm_sq(t: SpinorTensor):
    """|T|² = ĉ(T)^{…} T_{…}；浮点模式返回 float，精确模式返回 Fraction"""
    total = epsilon_contract(quaternionic_conjugate(t), t)
    if t.exact:
        return Fraction(total) if not isinstance(total, Fraction) else total
    return float(np.real(total))
