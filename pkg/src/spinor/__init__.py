"""
二分量旋量代数
对称化、v⊗U 的对称投影、3/5 范数恒等式与 Kato 常数估计
"""

from src.spinor.hermitian import HermitianVector, epsilon_trace_identity_residual, solder
from src.spinor.projection import (
    CAUCHY_SCHWARZ_CONSTANT,
    KATO_CONSTANT,
    KatoEstimate,
    kato_constants_estimate,
    pairing_ratio,
    project_parallel,
    projection_ratio,
    quaternion_vector,
    random_symmetric_quartic,
    symmetric_quartic_from_weights,
)
from src.spinor.tensor import (
    SpinorTensor,
    epsilon_contract,
    lower_index,
    norm_sq,
    quaternionic_conjugate,
    raise_index,
    symmetrize_unprimed,
    tensor_product,
)

__all__ = [
    "HermitianVector",
    "epsilon_trace_identity_residual",
    "solder",
    "CAUCHY_SCHWARZ_CONSTANT",
    "KATO_CONSTANT",
    "KatoEstimate",
    "kato_constants_estimate",
    "pairing_ratio",
    "project_parallel",
    "projection_ratio",
    "quaternion_vector",
    "symmetric_quartic_from_weights",
    "random_symmetric_quartic",
    "SpinorTensor",
    "epsilon_contract",
    "lower_index",
    "norm_sq",
    "quaternionic_conjugate",
    "raise_index",
    "symmetrize_unprimed",
    "tensor_product",
]
