"""
有限差分曲率
中心差分 + Richardson 外推求度量的一、二阶导数，进而得到 Christoffel 符号、
Riemann 张量（全下标，R_abab = K）、Ricci 张量与正交标架下的 6×6 曲率算子。

所有函数对点批量向量化：points 形状 (N, 4)。
"""

from typing import Callable, Optional, Tuple

import numpy as np

from src.config.config import Config
from src.errors import ChartError
from src.geometry.bivector import BASIS_FORMS
from src.geometry.curvature import CurvatureOperator
from src.log import log
from src.models.chart import Chart, check_spd


def _build_offsets() -> np.ndarray:
    eye = np.eye(4)
    offsets = [np.zeros(4)]
    for k in range(4):
        offsets.append(eye[k])
        offsets.append(-eye[k])
    for k in range(4):
        for m in range(k + 1, 4):
            for sk, sm in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                offsets.append(sk * eye[k] + sm * eye[m])
    return np.array(offsets)


# 中心点、±e_k、(±e_k ± e_m)，共 33 个
OFFSETS = _build_offsets()
_MIXED_START = 9


def _raw_derivatives(fn: Callable, points: np.ndarray, h: np.ndarray):
    x = points[:, None, :] + h[:, None, None] * OFFSETS[None]
    values = np.asarray(fn(x))
    tail = values.shape[2:]
    hh = h.reshape((-1,) + (1,) * len(tail))

    center = values[:, 0]
    plus = values[:, 1:9:2]
    minus = values[:, 2:9:2]
    first = (plus - minus) / (2.0 * hh[:, None])

    second = np.empty((values.shape[0], 4, 4) + tail)
    diag = (plus - 2.0 * center[:, None] + minus) / (hh[:, None] ** 2)
    for k in range(4):
        second[:, k, k] = diag[:, k]
    idx = _MIXED_START
    for k in range(4):
        for m in range(k + 1, 4):
            pp, pm, mp, mm = (values[:, idx + j] for j in range(4))
            mixed = (pp - pm - mp + mm) / (4.0 * hh**2)
            second[:, k, m] = mixed
            second[:, m, k] = mixed
            idx += 4
    return center, first, second


def derivatives(
    fn: Callable,
    points: np.ndarray,
    h: np.ndarray,
    levels: int,
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """函数值、一阶与二阶导数，levels 层 Richardson 外推（1 表示不外推）

    Args:
        fn: (N, M, 4) → (N, M, ...) 的向量化函数
        points: (N, 4)
        h: (N,) 每个点的基础步长

    Returns:
        (f, ∂f, ∂∂f)，形状 (N, ...)、(N, 4, ...)、(N, 4, 4, ...)
    """
    if levels < 1:
        raise ChartError("Richardson 层数至少为 1")
    firsts, seconds = [], []
    center = None
    for j in range(levels):
        c, d1, d2 = _raw_derivatives(fn, points, h / 2**j)
        if center is None:
            center = c
        firsts.append(d1)
        seconds.append(d2)
    for m in range(1, levels):
        factor = 4.0**m
        firsts = [(factor * firsts[j + 1] - firsts[j]) / (factor - 1.0) for j in range(len(firsts) - 1)]
        seconds = [(factor * seconds[j + 1] - seconds[j]) / (factor - 1.0) for j in range(len(seconds) - 1)]
    return center, firsts[0], seconds[0]


def _resolve(step: Optional[float], levels: Optional[int]) -> Tuple[float, int]:
    step = Config.fd_step if step is None else step
    levels = Config.richardson_levels if levels is None else levels
    if step <= 0:
        raise ChartError(f"差分步长必须为正: {step}")
    return step, levels


def metric_derivatives(chart: Chart, points: np.ndarray, step: Optional[float] = None, levels: Optional[int] = None):
    """(g, ∂g, ∂∂g)，∂g[n,k,i,j] = ∂_k g_ij，∂∂g[n,k,l,i,j] = ∂_k∂_l g_ij"""
    step, levels = _resolve(step, levels)
    points = np.atleast_2d(np.asarray(points, dtype=float))
    h = chart.step_sizes(points, step)
    chart.check_interior(points, 2.0 * h)
    g, dg, ddg = derivatives(chart.metric_fn, points, h, levels)
    check_spd(g, chart.name)
    return g, dg, ddg


def christoffel_from(g: np.ndarray, dg: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """返回 (Γ^a_bc, Γ_abc)，后者为第一类 Christoffel 符号"""
    lower = 0.5 * (
        np.einsum("nbdc->ndbc", dg) + np.einsum("ncdb->ndbc", dg) - dg
    )
    ginv = np.linalg.inv(g)
    return np.einsum("nad,ndbc->nabc", ginv, lower), lower


def riemann_from(g: np.ndarray, dg: np.ndarray, ddg: np.ndarray) -> np.ndarray:
    """R_iklm = ½(∂k∂l g_im + ∂i∂m g_kl - ∂k∂m g_il - ∂i∂l g_km) + Γ_pkl Γ^p_im - Γ_pkm Γ^p_il"""
    gamma, lower = christoffel_from(g, dg)
    second = 0.5 * (
        np.einsum("nklim->niklm", ddg)
        + np.einsum("nimkl->niklm", ddg)
        - np.einsum("nkmil->niklm", ddg)
        - np.einsum("nilkm->niklm", ddg)
    )
    quadratic = np.einsum("npkl,npim->niklm", lower, gamma) - np.einsum("npkm,npil->niklm", lower, gamma)
    return second + quadratic


def riemann_symmetry_residual(r: np.ndarray) -> np.ndarray:
    """反对称、对换对称与第一 Bianchi 恒等式的最大相对偏差，形状 (N,)"""
    scale = np.maximum(np.abs(r).max(axis=(1, 2, 3, 4)), 1e-300)
    anti = np.abs(r + np.einsum("nbacd->nabcd", r)).max(axis=(1, 2, 3, 4))
    pair = np.abs(r - np.einsum("ncdab->nabcd", r)).max(axis=(1, 2, 3, 4))
    bianchi = np.abs(
        r + np.einsum("nacdb->nabcd", r) + np.einsum("nadbc->nabcd", r)
    ).max(axis=(1, 2, 3, 4))
    return np.maximum(np.maximum(anti, pair), bianchi) / scale


def inverse_sqrt(g: np.ndarray) -> np.ndarray:
    """对称正定矩阵的对称正平方根之逆"""
    w, v = np.linalg.eigh(g)
    return np.einsum("nij,nj,nkj->nik", v, 1.0 / np.sqrt(w), v)


def operators_from(g: np.ndarray, r: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """坐标分量的 Riemann 张量 → 自适应基下的 6×6 算子

    标架 E = g^{-1/2} 保持定向。差分误差会让两块的迹略有不同，
    把差值平均分给两块，使结果满足块迹相等。

    Returns:
        (算子 (N, 6, 6), 块迹差 (N,))
    """
    e = inverse_sqrt(g)
    frame = np.einsum("nijkl,nia->najkl", r, e)
    frame = np.einsum("najkl,njb->nabkl", frame, e)
    frame = np.einsum("nabkl,nkc->nabcl", frame, e)
    frame = np.einsum("nabcl,nld->nabcd", frame, e)
    ops = 0.25 * np.einsum("Iab,nabcd,Jcd->nIJ", BASIS_FORMS, frame, BASIS_FORMS, optimize=True)
    ops = 0.5 * (ops + np.swapaxes(ops, 1, 2))
    gap = np.trace(ops[:, :3, :3], axis1=1, axis2=2) - np.trace(ops[:, 3:, 3:], axis1=1, axis2=2)
    shift = (gap / 6.0)[:, None] * np.ones(3)
    idx = np.arange(3)
    ops[:, idx, idx] -= shift
    ops[:, idx + 3, idx + 3] += shift
    return ops, gap


def christoffel_at(chart: Chart, x, step: Optional[float] = None, levels: Optional[int] = None) -> np.ndarray:
    """Γ^a_bc，形状 (4, 4, 4)"""
    g, dg, _ = metric_derivatives(chart, x, step, levels)
    return christoffel_from(g, dg)[0][0]


def riemann_at(chart: Chart, x, step: Optional[float] = None, levels: Optional[int] = None) -> np.ndarray:
    """R_abcd（坐标分量），形状 (4, 4, 4, 4)"""
    g, dg, ddg = metric_derivatives(chart, x, step, levels)
    return riemann_from(g, dg, ddg)[0]


def ricci_at(chart: Chart, x, step: Optional[float] = None, levels: Optional[int] = None) -> np.ndarray:
    """r_bd = g^{ac} R_abcd"""
    g, dg, ddg = metric_derivatives(chart, x, step, levels)
    r = riemann_from(g, dg, ddg)
    return np.einsum("nac,nabcd->nbd", np.linalg.inv(g), r)[0]


def curvature_operators(
    chart: Chart,
    points: np.ndarray,
    step: Optional[float] = None,
    levels: Optional[int] = None,
    chunk_size: Optional[int] = None,
) -> np.ndarray:
    """批量曲率算子 (N, 6, 6)，按 chunk_size 分块计算"""
    chunk_size = Config.quad_chunk_size if chunk_size is None else chunk_size
    points = np.atleast_2d(np.asarray(points, dtype=float))
    out = np.empty((points.shape[0], 6, 6))
    worst_gap = 0.0
    for start in range(0, points.shape[0], chunk_size):
        block = points[start:start + chunk_size]
        g, dg, ddg = metric_derivatives(chart, block, step, levels)
        ops, gap = operators_from(g, riemann_from(g, dg, ddg))
        out[start:start + chunk_size] = ops
        worst_gap = max(worst_gap, float(np.abs(gap).max(initial=0.0)))
    log.debug(f"{chart.name}: {points.shape[0]} 个点的曲率算子, 最大块迹差 {worst_gap:.3e}")
    return out


def curvature_operator_at(
    chart: Chart, x, step: Optional[float] = None, levels: Optional[int] = None
) -> CurvatureOperator:
    ops = curvature_operators(chart, np.asarray(x, dtype=float)[None], step, levels)
    return CurvatureOperator(ops[0], tol=1e-8)


def laplacian_at(
    chart: Chart,
    u: Callable[[np.ndarray], np.ndarray],
    x,
    step: Optional[float] = None,
    levels: Optional[int] = None,
) -> np.ndarray:
    """正 Laplace-Beltrami 算子 Δu = -g^{ij}(∂_i∂_j u - Γ^k_ij ∂_k u)，返回 (N,)"""
    step, levels = _resolve(step, levels)
    points = np.atleast_2d(np.asarray(x, dtype=float))
    g, dg, _ = metric_derivatives(chart, points, step, levels)
    gamma, _ = christoffel_from(g, dg)
    h = chart.step_sizes(points, step)
    _, du, ddu = derivatives(u, points, h, levels)
    hessian = ddu - np.einsum("nkij,nk->nij", gamma, du)
    return -np.einsum("nij,nij->n", np.linalg.inv(g), hessian)
