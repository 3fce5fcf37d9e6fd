"""
对称 3×3 矩阵特征值
闭式三角法求解；当归一化判别式 1 - r² 接近 0（存在重根）时改用 LAPACK 的 eigh，
避免 acos 在 ±1 附近放大舍入误差。
"""

from typing import Tuple

import numpy as np

# 归一化判别式低于该阈值时走 eigh 分支
DEGENERACY_THRESHOLD = 1e-10


def _trig_eigenvalues(m: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """批量三角法，返回 (升序特征值, 需要回退的掩码)

    Args:
        m: (..., 3, 3) 对称矩阵
    """
    q = np.trace(m, axis1=-2, axis2=-1) / 3.0
    p1 = m[..., 0, 1] ** 2 + m[..., 0, 2] ** 2 + m[..., 1, 2] ** 2
    diag = np.diagonal(m, axis1=-2, axis2=-1)
    p2 = np.sum((diag - q[..., None]) ** 2, axis=-1) + 2.0 * p1
    p = np.sqrt(p2 / 6.0)

    scale = np.maximum(np.abs(m).max(axis=(-2, -1)), np.finfo(float).tiny)
    flat = p <= 1e-15 * scale
    safe_p = np.where(flat, 1.0, p)
    b = (m - q[..., None, None] * np.eye(3)) / safe_p[..., None, None]
    r = np.clip(np.linalg.det(b) / 2.0, -1.0, 1.0)
    phi = np.arccos(r) / 3.0

    top = q + 2.0 * p * np.cos(phi)
    bottom = q + 2.0 * p * np.cos(phi + 2.0 * np.pi / 3.0)
    middle = 3.0 * q - top - bottom
    values = np.stack([bottom, middle, top], axis=-1)
    values = np.where(flat[..., None], q[..., None] * np.ones(3), values)

    fallback = (~flat) & (1.0 - r * r < DEGENERACY_THRESHOLD)
    return values, fallback


def eigenvalues_sym3_batch(m: np.ndarray) -> np.ndarray:
    """(..., 3, 3) 对称矩阵的升序特征值"""
    m = np.asarray(m, dtype=float)
    values, fallback = _trig_eigenvalues(m)
    if np.any(fallback):
        values = values.copy()
        values[fallback] = np.linalg.eigh(m[fallback])[0]
    return values


def eigenvalues_sym3(m) -> Tuple[float, float, float]:
    """升序特征值 (λ, μ, ν)；接受 TraceFree3 或 3×3 数组"""
    matrix = getattr(m, "matrix", m)
    values = eigenvalues_sym3_batch(np.asarray(matrix, dtype=float))
    return float(values[0]), float(values[1]), float(values[2])


def eigen_sym3(m) -> Tuple[np.ndarray, np.ndarray]:
    """特征值与特征向量（列向量），按特征值升序"""
    matrix = np.asarray(getattr(m, "matrix", m), dtype=float)
    values = np.array(eigenvalues_sym3(matrix))
    vectors = np.linalg.eigh(matrix)[1]
    return values, vectors
