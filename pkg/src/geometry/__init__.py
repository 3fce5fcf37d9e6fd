"""
二形式与代数曲率算子（四维）
Λ² = Λ⁺ ⊕ Λ⁻ 的基、Hodge 星、曲率分解、截面曲率与逐点不等式
"""

from src.geometry.bivector import Bivector6, adapted_basis, hodge_star, so4_action
from src.geometry.curvature import (
    CurvatureDecomposition,
    CurvatureOperator,
    TraceFree3,
    curvature_terms_batch,
    decompose,
    decompose_batch,
    integrands_batch,
    reconstruct,
    reconstruct_batch,
)
from src.geometry.eigen import eigen_sym3, eigenvalues_sym3, eigenvalues_sym3_batch
from src.geometry.inequalities import (
    det_bound_check,
    eigen_lower_bound_report,
    gauss_bonnet_integrand,
    lemma_k_check,
    pointwise_lemma_chain,
    signature_integrand,
    weitzenbock_from_spectrum,
    weitzenbock_parallel_check,
)
from src.geometry.sectional import (
    SectionalMinimum,
    min_sectional,
    min_sectional_einstein,
    random_unit_simple,
    sectional_curvature,
    sectional_samples,
)

__all__ = [
    "Bivector6",
    "adapted_basis",
    "hodge_star",
    "so4_action",
    "CurvatureDecomposition",
    "CurvatureOperator",
    "TraceFree3",
    "curvature_terms_batch",
    "decompose",
    "decompose_batch",
    "integrands_batch",
    "reconstruct",
    "reconstruct_batch",
    "eigen_sym3",
    "eigenvalues_sym3",
    "eigenvalues_sym3_batch",
    "det_bound_check",
    "eigen_lower_bound_report",
    "gauss_bonnet_integrand",
    "lemma_k_check",
    "pointwise_lemma_chain",
    "signature_integrand",
    "weitzenbock_from_spectrum",
    "weitzenbock_parallel_check",
    "SectionalMinimum",
    "min_sectional",
    "min_sectional_einstein",
    "random_unit_simple",
    "sectional_curvature",
    "sectional_samples",
]
