"""
模型几何
坐标卡、有限差分曲率、模型目录与共形变换
"""

from src.models.catalog import (
    ModelManifold,
    ModelReference,
    catalog,
    flat_torus,
    fubini_study,
    get_model,
    homothety,
    product_spheres,
    reference_operator,
    round_sphere,
)
from src.models.chart import Chart
from src.models.conformal import (
    ConvergenceStudy,
    conformal_convergence_study,
    conformal_law_residual,
    conformal_rescale,
    constant_factor,
    frak_S_at,
    gaussian_bump,
)
from src.models.finite_difference import (
    christoffel_at,
    curvature_operator_at,
    curvature_operators,
    laplacian_at,
    ricci_at,
    riemann_at,
)

__all__ = [
    "ModelManifold",
    "ModelReference",
    "catalog",
    "flat_torus",
    "fubini_study",
    "get_model",
    "homothety",
    "product_spheres",
    "reference_operator",
    "round_sphere",
    "Chart",
    "ConvergenceStudy",
    "conformal_convergence_study",
    "conformal_law_residual",
    "conformal_rescale",
    "constant_factor",
    "frak_S_at",
    "gaussian_bump",
    "christoffel_at",
    "curvature_operator_at",
    "curvature_operators",
    "laplacian_at",
    "ricci_at",
    "riemann_at",
]
