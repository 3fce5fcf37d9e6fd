"""
拓扑障碍门限
全部用整数/有理数精确比较，边界情形不经过浮点。
"""

import math
from fractions import Fraction
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from src.log import log
from src.topology.descriptor import TopologyDescriptor, check_parity, require_integer

WINDOW_COEFFICIENT = Fraction(15, 4)
CHI_CEILING = 9


class ExactMargin(BaseModel):
    """有理数余量：exact 为 "p/q" 字符串，value 仅供展示"""

    model_config = ConfigDict(frozen=True)

    name: str
    exact: str
    value: float

    @classmethod
    def of(cls, name: str, amount) -> "ExactMargin":
        amount = Fraction(amount)
        return cls(name=name, exact=str(amount), value=float(amount))


class GateResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    gate: str
    chi: int
    tau: int
    ok: bool
    margins: List[ExactMargin]
    provenance: str


def hitchin_enclosure(digits: int = 12) -> Tuple[Fraction, Fraction]:
    """(3/2)^{3/2} 的有理包围 [lo, hi]，hi - lo = 10^-digits / 8"""
    scale = 10**digits
    # √(27/8) = √216 / 8
    root = math.isqrt(216 * scale * scale)
    return Fraction(root, 8 * scale), Fraction(root + 1, 8 * scale)


def theorem_b_gate(chi: int, tau: int) -> GateResult:
    """9 ≥ χ > (15/4)|τ|"""
    check_parity(chi, tau)
    upper = CHI_CEILING - chi
    window = chi - WINDOW_COEFFICIENT * abs(tau)
    return GateResult(
        gate="theorem_b",
        chi=chi,
        tau=tau,
        ok=upper >= 0 and window > 0,
        margins=[ExactMargin.of("chi_ceiling", upper), ExactMargin.of("signature_window", window)],
        provenance="非负截面曲率、既不自对偶也不反自对偶的 Einstein 度量：9 ≥ χ > (15/4)|τ|",
    )


def hitchin_gate(chi: int, tau: int) -> GateResult:
    """χ ≥ (3/2)^{3/2}|τ|，按 8χ² ≥ 27τ² 精确判定"""
    check_parity(chi, tau)
    squared = 8 * chi * chi - 27 * tau * tau
    lo, hi = hitchin_enclosure()
    # 带符号的线性余量用包围区间的保守端
    linear = chi - hi * abs(tau)
    return GateResult(
        gate="hitchin",
        chi=chi,
        tau=tau,
        ok=chi >= 0 and squared >= 0,
        margins=[
            ExactMargin.of("squared", squared),
            ExactMargin.of("linear_lower", linear),
            ExactMargin.of("coefficient_lo", lo),
            ExactMargin.of("coefficient_hi", hi),
        ],
        provenance="Hitchin：Einstein 四维流形满足 χ ≥ (3/2)^{3/2}|τ|",
    )


class Deduction(BaseModel):
    model_config = ConfigDict(frozen=True)

    tau: int
    applicable: bool
    min_chi: Optional[int]
    # k 重覆叠使 χ 变为 kχ，kχ ≤ 9 允许的最大 k
    cover_degree_bound: Optional[int]
    reasoning: List[str]


def simply_connected_deduction(tau: int) -> Deduction:
    """由窗口与奇偶性求最小可行 χ，再用覆叠论证推出单连通"""
    tau = abs(require_integer("τ", tau))
    if tau == 0:
        return Deduction(
            tau=0,
            applicable=False,
            min_chi=None,
            cover_degree_bound=None,
            reasoning=["τ = 0 时窗口不给出下界，S²×S²/ℤ₂ 说明此时得不到单连通性"],
        )
    floor = WINDOW_COEFFICIENT * tau
    candidates = [chi for chi in range(math.floor(floor) + 1, CHI_CEILING + 1) if (chi - tau) % 2 == 0]
    reasoning = [f"χ > (15/4)·{tau} = {floor}，且 χ ≡ {tau} (mod 2)"]
    if not candidates:
        reasoning.append(f"不存在 χ ≤ {CHI_CEILING} 的可行值，这样的流形不存在")
        return Deduction(tau=tau, applicable=True, min_chi=None, cover_degree_bound=None, reasoning=reasoning)
    min_chi = candidates[0]
    degree = CHI_CEILING // min_chi
    reasoning.append(f"最小 χ = {min_chi}")
    reasoning.append(
        f"万有覆叠有限（Myers），k 重覆叠满足同一窗口，kχ ≤ {CHI_CEILING} 迫使 k ≤ {degree}"
    )
    if degree == 1:
        reasoning.append("因此流形单连通")
    return Deduction(tau=tau, applicable=True, min_chi=min_chi, cover_degree_bound=degree, reasoning=reasoning)


class TheoremAResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    b_plus: int
    b_minus: int
    hypotheses_met: bool
    conclusion: str
    theorem_b: GateResult
    hitchin: GateResult


FUBINI_STUDY_CONCLUSION = "度量位似于 Fubini-Study ℂP²"
EXCLUDED_CONCLUSION = "不存在非负截面曲率的 Einstein 度量"
FLAT_CONCLUSION = "只可能是平坦度量"


def theorem_a_gate(desc: TopologyDescriptor) -> TheoremAResult:
    """b⁻ = 0 且 b⁺ ≠ 0 时，度量只能是 Fubini-Study ℂP²，因而 b⁺ 必须为 1"""
    chi, tau = desc.euler_characteristic, desc.signature
    met = desc.b_minus == 0 and desc.b_plus != 0
    if not met:
        conclusion = "假设不满足（需要 b⁻ = 0 且 b⁺ ≠ 0）"
    elif desc.b_plus == 1 and desc.b_one == 0:
        conclusion = FUBINI_STUDY_CONCLUSION
    else:
        conclusion = EXCLUDED_CONCLUSION
    return TheoremAResult(
        b_plus=desc.b_plus,
        b_minus=desc.b_minus,
        hypotheses_met=met,
        conclusion=conclusion,
        theorem_b=theorem_b_gate(chi, tau),
        hitchin=hitchin_gate(chi, tau),
    )


class CombinedVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    descriptor: dict
    verdict: str
    # 触发结论的定理
    provenance: List[str]
    gates: List[GateResult]
    deduction: Optional[Deduction] = None


def combined_verdict(desc: TopologyDescriptor) -> CombinedVerdict:
    """依次应用 Hitchin 不等式、定号交叉形式的刚性（两种定向）与 χ-τ 窗口"""
    if not desc.orientable:
        return CombinedVerdict(
            descriptor=desc.to_dict(),
            verdict="不适用：非定向流形，请对定向二重覆叠判定",
            provenance=[],
            gates=[],
        )
    if not desc.finite_pi1:
        return CombinedVerdict(
            descriptor=desc.to_dict(),
            verdict=FLAT_CONCLUSION,
            provenance=["基本群无限：Myers 定理排除 λ > 0，λ = 0 时非负截面曲率迫使度量平坦"],
            gates=[],
        )
    chi, tau = desc.euler_characteristic, desc.signature
    hitchin = hitchin_gate(chi, tau)
    window = theorem_b_gate(chi, tau)
    gates = [hitchin, window]
    deduction = simply_connected_deduction(tau) if tau != 0 else None

    if not hitchin.ok:
        verdict, provenance = EXCLUDED_CONCLUSION, ["Hitchin 不等式不成立"]
    elif (desc.b_minus == 0) != (desc.b_plus == 0):
        # 定向选为 b⁻ = 0 后套用正定交叉形式的刚性
        oriented = desc if desc.b_minus == 0 else desc.reversed()
        result = theorem_a_gate(oriented)
        verdict, provenance = result.conclusion, [f"正定交叉形式（b⁺ = {oriented.b_plus}, b⁻ = 0）：只能是 Fubini-Study ℂP²"]
    elif not window.ok:
        # 窗口之外只剩自对偶或反自对偶的情形，那只能是 S⁴ 或 ℂP²
        verdict = EXCLUDED_CONCLUSION
        provenance = ["9 ≥ χ > (15/4)|τ| 不成立", "自对偶分支只有 S⁴ 与 ℂP²"]
    else:
        verdict = "未被排除"
        provenance = ["Hitchin 不等式与 χ-τ 窗口均成立"]
    log.debug(f"combined_verdict(b⁺={desc.b_plus}, b⁻={desc.b_minus}, b₁={desc.b_one}): {verdict}")
    return CombinedVerdict(
        descriptor=desc.to_dict(),
        verdict=verdict,
        provenance=provenance,
        gates=gates,
        deduction=deduction,
    )
