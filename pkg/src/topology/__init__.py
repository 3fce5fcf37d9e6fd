"""
拓扑障碍
Betti 数描述、χ-τ 门限、同胚型枚举
"""

from src.topology.descriptor import TopologyDescriptor, check_parity
from src.topology.gates import (
    CombinedVerdict,
    Deduction,
    ExactMargin,
    GateResult,
    TheoremAResult,
    combined_verdict,
    hitchin_enclosure,
    hitchin_gate,
    simply_connected_deduction,
    theorem_a_gate,
    theorem_b_gate,
)
from src.topology.homeotypes import (
    HomeotypeClass,
    enumerate_homeotypes,
    hitchin_positive_form_candidates,
    self_dual_equality_signature,
    tian_examples,
)
