"""
v⊗U 到 S₋⊗⊙⁵S₊ 的正交投影及 Kato 常数

    v_{A'(A}U_{BCDE)} = (1/5)[v_{A'A}U_{BCDE} + v_{A'B}U_{ACDE} + v_{A'C}U_{BADE}
                             + v_{A'D}U_{BCAE} + v_{A'E}U_{BCDA}]

|v_{A'(A}U_{BCDE)}|² = (3/5)|v|²|U|² 对所有非零 v、U 成立，由 Cauchy-Schwarz 得
|⟨v⊗U, T⟩| ≤ √(3/5)|v||U||T|，倒数 √(5/3) 即加强的 Kato 常数。
"""

import math
from typing import Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict

from src.config.config import Config
from src.errors import SpinorInputError
from src.log import log
from src.spinor.hermitian import HermitianVector, solder
from src.spinor.tensor import (
    SpinorTensor,
    canonicalize_symmetric,
    is_symmetric_exact,
    is_symmetric_within,
    norm_sq,
    symmetrize_last,
    tensor_product,
)

CAUCHY_SCHWARZ_CONSTANT = math.sqrt(3.0 / 5.0)
KATO_CONSTANT = math.sqrt(5.0 / 3.0)

VectorLike = Union[HermitianVector, SpinorTensor]


class KatoEstimate(BaseModel):
    model_config = ConfigDict(frozen=True)

    samples: int
    cauchy_schwarz_sup: float
    kato_inf: float
    random_sup: float
    target: float
    gap: float


def _vector_tensor(v: VectorLike) -> SpinorTensor:
    t = v.tensor if isinstance(v, HermitianVector) else v
    if (t.primed_rank, t.unprimed_rank) != (1, 1):
        raise SpinorInputError("v 必须是 (1,1) 型张量")
    return t


def _check_quartic(u: SpinorTensor) -> None:
    if (u.primed_rank, u.unprimed_rank) != (0, 4):
        raise SpinorInputError("U 必须是 (0,4) 型张量")
    if u.symmetric_unprimed:
        return
    symmetric = is_symmetric_exact(u.entries, 4) if u.exact else is_symmetric_within(u, 1e-12)
    if not symmetric:
        raise SpinorInputError("U 不是全对称张量")


def _five_term(w: np.ndarray) -> np.ndarray:
    """w 的最后六个轴为 (A', A, B, C, D, E)，把 A 依次与 A…E 交换后平均"""
    first = w.ndim - 5
    total = w
    for k in range(1, 5):
        total = total + np.swapaxes(w, first, first + k)
    return total / 5


def project_parallel(v: VectorLike, u: SpinorTensor) -> SpinorTensor:
    """v_{A'(A}U_{BCDE)}，按五项展开计算"""
    vt = _vector_tensor(v)
    _check_quartic(u)
    w = tensor_product(vt, u).entries
    projected = _five_term(w)
    # 回填到排序后的多重指标，使对称标记逐位成立
    return SpinorTensor(1, 5, canonicalize_symmetric(projected, 5), symmetric_unprimed=True)


def projection_ratio(v: VectorLike, u: SpinorTensor):
    """|v_{A'(A}U_{BCDE)}|² / (|v|²|U|²)，恒等于 3/5"""
    vt = _vector_tensor(v)
    v_sq = norm_sq(vt)
    u_sq = norm_sq(u)
    if v_sq == 0 or u_sq == 0:
        raise SpinorInputError("v 与 U 都必须非零")
    return norm_sq(project_parallel(vt, u)) / (v_sq * u_sq)


def pairing_ratio(v: VectorLike, u: SpinorTensor, t: SpinorTensor) -> float:
    """|⟨v⊗U, T⟩| / (|v||U||T|)，⟨·,·⟩ 为厄米内积"""
    vt = _vector_tensor(v)
    w = tensor_product(vt, u)
    denom = math.sqrt(float(norm_sq(vt)) * float(norm_sq(u)) * float(norm_sq(t)))
    if denom == 0.0:
        raise SpinorInputError("配对比值的输入不能为零")
    return float(abs(np.sum(np.conjugate(w.entries) * t.entries))) / denom


def random_symmetric_quartic(rng: np.random.Generator, count: Optional[int] = None) -> np.ndarray:
    """随机复对称 (0,4) 分量；count 为 None 时返回单个 (2,2,2,2)"""
    shape = (2,) * 4 if count is None else (count,) + (2,) * 4
    raw = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    return symmetrize_last(raw, 4, canonical=count is None)


def _batch_ratios(rng: np.random.Generator, count: int):
    v = solder(rng.standard_normal((count, 4)))
    u = random_symmetric_quartic(rng, count)
    w = v[:, :, :, None, None, None, None] * u[:, None, None, :, :, :, :]
    image = _five_term(w)

    raw = rng.standard_normal(w.shape) + 1j * rng.standard_normal(w.shape)
    noise = symmetrize_last(raw, 5, canonical=False)

    axes = tuple(range(1, w.ndim))

    def norm(x):
        return np.sqrt(np.sum(np.abs(x) ** 2, axis=axes))

    w_norm = norm(w)
    # 近对齐族：T = P(v⊗U)/|P(v⊗U)| + η·随机像元素/|…|，η 对数均匀
    eta = 10.0 ** rng.uniform(-6.0, 0.0, size=count)
    unit_image = image / norm(image).reshape((-1,) + (1,) * 6)
    unit_noise = noise / norm(noise).reshape((-1,) + (1,) * 6)
    aligned = unit_image + eta.reshape((-1,) + (1,) * 6) * unit_noise

    def ratio(t):
        pairing = np.abs(np.sum(np.conjugate(w) * t, axis=axes))
        return pairing / (w_norm * norm(t))

    return ratio(aligned), ratio(noise)


def kato_constants_estimate(samples: int, seed: Optional[int] = None, chunk: int = 10000) -> KatoEstimate:
    """采样估计 sup |⟨v⊗U, T⟩|/(|v||U||T|)，T 取自对称投影的像

    估计值从下方逼近 √(3/5)，其倒数逼近 √(5/3)。
    """
    if samples < 1:
        raise SpinorInputError("samples 至少为 1")
    rng = np.random.default_rng(Config.seed if seed is None else seed)
    best = 0.0
    best_random = 0.0
    done = 0
    while done < samples:
        n = min(chunk, samples - done)
        aligned, random_ratio = _batch_ratios(rng, n)
        best = max(best, float(aligned.max()))
        best_random = max(best_random, float(random_ratio.max()))
        done += n
    log.debug(f"kato 估计: {samples} 个样本, sup={best:.15f}, 随机 sup={best_random:.6f}")
    return KatoEstimate(
        samples=samples,
        cauchy_schwarz_sup=best,
        kato_inf=1.0 / best,
        random_sup=best_random,
        target=CAUCHY_SCHWARZ_CONSTANT,
        gap=CAUCHY_SCHWARZ_CONSTANT - best,
    )


def quaternion_vector(a, b) -> SpinorTensor:
    """精确模式下的实 (1,1) 张量 v = [[a, -b], [b, a]]"""
    return SpinorTensor.from_exact(1, 1, [[a, -b], [b, a]])


def symmetric_quartic_from_weights(weights) -> SpinorTensor:
    """全对称 (0,4) 张量：分量只依赖指标中 1 的个数 k，取 weights[k]"""
    if len(weights) != 5:
        raise SpinorInputError(f"需要 5 个权重, 实际 {len(weights)}")
    grid = np.indices((2,) * 4).sum(axis=0)
    values = np.empty(grid.shape, dtype=object)
    for index in np.ndindex(grid.shape):
        values[index] = weights[grid[index]]
    return SpinorTensor.from_exact(0, 4, values, symmetric_unprimed=True)
