"""
截面曲率的计算与极小化

单位简单二重向量写成 φ = (u ⊕ v)/√2，u、v 为 ℝ³ 单位向量，于是

    K(φ) = ⟨φ, ℛφ⟩ = ½⟨u,Au⟩ + ½⟨v,Cv⟩ + ⟨u,Bv⟩

极小化在 S² × S² 上进行：多起点交替精确块求解（每步是球面上的二次型极小，
化为长期方程），再用投影梯度打磨。
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from scipy.optimize import brentq

from src.config.config import Config
from src.errors import CurvatureInputError
from src.geometry.bivector import SQRT2, Bivector6
from src.geometry.curvature import CurvatureDecomposition, CurvatureOperator
from src.log import log


@dataclass(frozen=True)
class SectionalMinimum:
    value: float
    argmin: Bivector6
    certified: bool
    iterations: int
    gradient_norm: float


def sectional_curvature(r: CurvatureOperator, phi: Bivector6, tol: float = 1e-10) -> float:
    """φ 对偶平面的截面曲率，φ 必须是单位简单二重向量"""
    if not phi.is_unit_simple(tol):
        raise CurvatureInputError(
            f"需要单位简单二重向量, |φ⁺|²={phi.plus @ phi.plus:.6g}, |φ⁻|²={phi.minus @ phi.minus:.6g}"
        )
    return r.quadratic(phi)


def random_unit_simple(rng: np.random.Generator, count: int) -> np.ndarray:
    """均匀采样 count 个单位简单二重向量，返回 (count, 6)"""
    u = rng.standard_normal((count, 3))
    v = rng.standard_normal((count, 3))
    u /= np.linalg.norm(u, axis=1, keepdims=True)
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    return np.concatenate([u, v], axis=1) / SQRT2


def sectional_samples(r: CurvatureOperator, phis: np.ndarray) -> np.ndarray:
    """批量截面曲率 ⟨φ, ℛφ⟩，phis 形状 (N, 6)"""
    return np.einsum("ni,ij,nj->n", phis, r.matrix, phis)


# brentq 接受的最小相对容差
_BRENTQ_RTOL = 4.0 * np.finfo(float).eps


def _objective(a, c, b, u, v) -> float:
    return float(0.5 * u @ a @ u + 0.5 * v @ c @ v + u @ b @ v)


def _sphere_quadratic_min(m: np.ndarray, g: np.ndarray) -> np.ndarray:
    """在单位球面上极小化 ½xᵀMx + gᵀx

    最优点满足 (M - σI)x = -g，σ ≤ λ₁；在特征基下解长期方程 Σ c²/(λ-σ)² = 1。
    """
    lam, q = np.linalg.eigh(m)
    c = q.T @ g
    c_norm = float(np.linalg.norm(c))
    if c_norm == 0.0:
        return q[:, 0].copy()

    spread = max(float(lam[-1] - lam[0]), c_norm, 1e-300)
    gap = lam - lam[0]
    active = gap > 1e-12 * spread
    # 最小特征空间可能退化，按整个特征空间上的分量判断
    c_low = float(np.linalg.norm(c[~active]))
    if c_low > 1e-12 * spread:
        def secular(sigma):
            shift = lam - sigma
            if np.any(shift <= 0.0):
                return np.inf
            return float(np.sum(c**2 / shift**2) - 1.0)

        lo = lam[0] - c_norm
        hi = lam[0] - c_low
        sigma = hi if secular(hi) <= 0.0 else brentq(secular, lo, hi, xtol=1e-15, rtol=_BRENTQ_RTOL)
        return q @ (-c / (lam - sigma))

    # 困难情形：g 与最小特征空间正交
    x = np.zeros(3)
    x[active] = -c[active] / gap[active]
    rest = 1.0 - float(x @ x)
    if rest >= 0.0:
        x[~active] = 0.0
        x[0] = np.sqrt(rest)
        return q @ x

    def secular_active(sigma):
        shift = lam[active] - sigma
        if np.any(shift <= 0.0):
            return np.inf
        return float(np.sum(c[active] ** 2 / shift**2) - 1.0)

    sigma = brentq(secular_active, lam[0] - c_norm, lam[0], xtol=1e-15, rtol=_BRENTQ_RTOL)
    x = np.zeros(3)
    x[active] = -c[active] / (lam[active] - sigma)
    return q @ x


def _alternate(a, c, b, u, v, max_iterations: int, scale: float) -> Tuple[np.ndarray, np.ndarray, int, bool]:
    value = _objective(a, c, b, u, v)
    for it in range(1, max_iterations + 1):
        u = _sphere_quadratic_min(a, b @ v)
        v = _sphere_quadratic_min(c, b.T @ u)
        new_value = _objective(a, c, b, u, v)
        if value - new_value <= 1e-15 * scale:
            return u, v, it, True
        value = new_value
    return u, v, max_iterations, False


def _projected_gradient(a, c, b, u, v) -> Tuple[np.ndarray, np.ndarray]:
    gu = a @ u + b @ v
    gv = c @ v + b.T @ u
    return gu - (u @ gu) * u, gv - (v @ gv) * v


def _polish(a, c, b, u, v, scale: float, steps: int = 50) -> Tuple[np.ndarray, np.ndarray]:
    step = 0.5 / scale
    value = _objective(a, c, b, u, v)
    for _ in range(steps):
        gu, gv = _projected_gradient(a, c, b, u, v)
        if np.hypot(np.linalg.norm(gu), np.linalg.norm(gv)) <= 1e-14 * scale:
            break
        nu = u - step * gu
        nv = v - step * gv
        nu /= np.linalg.norm(nu)
        nv /= np.linalg.norm(nv)
        new_value = _objective(a, c, b, nu, nv)
        if new_value < value:
            u, v, value = nu, nv, new_value
        else:
            step *= 0.5
    return u, v


def _normalize_sign(u: np.ndarray, v: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """(u, v) 与 (-u, -v) 给出同一平面；取 u 首个非零分量为正"""
    for comp in u:
        if abs(comp) > 1e-12:
            if comp < 0:
                return -u, -v
            break
    return u, v


def _starting_points(a, c, b, starts: int, rng: np.random.Generator) -> List[Tuple[np.ndarray, np.ndarray]]:
    eu = np.linalg.eigh(a)[1]
    ev = np.linalg.eigh(c)[1]
    su, _, svt = np.linalg.svd(b)
    points = []
    for k in range(3):
        points.append((eu[:, k], _sphere_quadratic_min(c, b.T @ eu[:, k])))
        points.append((_sphere_quadratic_min(a, b @ ev[:, k]), ev[:, k]))
        points.append((su[:, k], -svt[k]))
    for _ in range(starts):
        u = rng.standard_normal(3)
        v = rng.standard_normal(3)
        points.append((u / np.linalg.norm(u), v / np.linalg.norm(v)))
    return points


def min_sectional(
    r: CurvatureOperator,
    starts: Optional[int] = None,
    max_iterations: Optional[int] = None,
    seed: Optional[int] = None,
) -> SectionalMinimum:
    """截面曲率极小值及极小平面

    相同极小值之间按符号规范化后 (u, v) 的字典序取最小者，保证输出可复现。
    """
    starts = Config.opt_starts if starts is None else starts
    max_iterations = Config.opt_max_iterations if max_iterations is None else max_iterations
    seed = Config.seed if seed is None else seed
    rng = np.random.default_rng(seed)

    a, c, b = r.block_plus, r.block_minus, r.block_mixed
    scale = max(float(np.abs(r.matrix).max()), 1e-300)

    candidates = []
    all_converged = True
    total_iterations = 0
    for u0, v0 in _starting_points(a, c, b, starts, rng):
        u, v, iterations, converged = _alternate(a, c, b, u0, v0, max_iterations, scale)
        u, v = _polish(a, c, b, u, v, scale)
        u, v = _normalize_sign(u, v)
        total_iterations += iterations
        all_converged &= converged
        candidates.append((_objective(a, c, b, u, v), u, v))

    best_value = min(item[0] for item in candidates)
    ties = [item for item in candidates if item[0] <= best_value + 1e-12 * scale]
    value, u, v = min(ties, key=lambda item: tuple(np.round(np.concatenate([item[1], item[2]]), 9)))

    gu, gv = _projected_gradient(a, c, b, u, v)
    gradient_norm = float(np.hypot(np.linalg.norm(gu), np.linalg.norm(gv)))
    certified = all_converged and gradient_norm <= 1e-7 * scale
    if certified:
        log.debug(f"min_sectional: value={value:.12g}, 迭代 {total_iterations}, |grad|={gradient_norm:.2e}")
    else:
        log.warning(
            f"min_sectional 未认证: value={value:.12g}, |grad|={gradient_norm:.2e}, 收敛={all_converged}"
        )
    return SectionalMinimum(
        value=value,
        argmin=Bivector6.from_halves(u / SQRT2, v / SQRT2),
        certified=certified,
        iterations=total_iterations,
        gradient_norm=gradient_norm,
    )


def min_sectional_einstein(d: CurvatureDecomposition) -> float:
    """Einstein 情形的闭式：s/12 + (λ₊ + λ₋)/2，λ± 为 W^± 的最小特征值"""
    d.require_einstein()
    lam_plus = d.w_plus.eigenvalues()[0]
    lam_minus = d.w_minus.eigenvalues()[0]
    return d.scalar / 12.0 + 0.5 * (lam_plus + lam_minus)
