from src.quadrature.gauss_legendre import QuadratureScheme, QuadratureSpec
from src.quadrature.invariants import (
    InvariantReport,
    TermIntegrals,
    Verdict,
    euler_characteristic,
    homogeneous_cross_check,
    integrate,
    invariant_report,
    signature,
    term_integrals,
    total_scalar_functional,
    volume,
)
from src.quadrature.checks import (
    bishop_volume_check,
    conformal_weyl_invariance,
    corollary_chain_s4_bound,
    finiteness_bounds_check,
    gap_theorem_check,
    lemma_chi_check,
    scalar_window,
    theorem_b_chain,
    theorem_c_d_bounds_report,
)
