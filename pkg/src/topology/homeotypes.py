"""
单连通候选流形的同胚型枚举及若干算术推论

枚举规则（对"至多十二个同胚型"的重构）：
- 自对偶分支只留下 S⁴ 与 ℂP²；
- 其余 (b⁺, b⁻) 须满足 χ = 2 + b⁺ + b⁻ ≤ 9 且 χ > (15/4)|τ|；
- 偶型式需 8 | τ，在范围内即 τ = 0，此时 b² 偶数的 (k, k) 分出偶型 kH 与奇型；
- 不计定向，(b⁺, b⁻) 与 (b⁻, b⁺) 视为同一类。
"""

from fractions import Fraction
from typing import List, Optional

from pydantic import BaseModel, ConfigDict

from src.topology.descriptor import TopologyDescriptor
from src.topology.gates import GateResult, hitchin_gate, theorem_a_gate, theorem_b_gate

SELF_DUAL_BRANCH = {(0, 0): "S⁴", (1, 0): "ℂP²"}
ENUMERATION_LIMIT = 7


class HomeotypeClass(BaseModel):
    model_config = ConfigDict(frozen=True)

    b_plus: int
    b_minus: int
    chi: int
    tau: int
    # even / odd；b² = 0 时为 empty
    form_type: str
    representative: Optional[str]
    source: str
    # 类别列表是对计数的重构，而非文献直接给出
    derived_reading: bool = True


def _blowups(count: int, symbol: str) -> str:
    return symbol if count == 1 else f"{count}{symbol}"


def representative(b_plus: int, b_minus: int, form_type: str) -> Optional[str]:
    if (b_plus, b_minus) in SELF_DUAL_BRANCH:
        return SELF_DUAL_BRANCH[(b_plus, b_minus)]
    if form_type == "even":
        return "S²×S²" if b_plus == 1 else f"#{b_plus}(S²×S²)"
    if form_type == "odd":
        return f"{_blowups(b_plus, 'ℂP²')}#{_blowups(b_minus, 'ℂ̄P²')}"
    return None


def _form_types(b_plus: int, b_minus: int) -> List[str]:
    if b_plus + b_minus == 0:
        return ["empty"]
    tau = b_plus - b_minus
    types = ["odd"]
    # 不定偶型式 kH 需要 τ = 0 与 b² 偶数；定号偶型式需 8 | τ，范围内不出现
    if tau % 8 == 0 and (b_plus + b_minus) % 2 == 0 and b_plus > 0 and b_minus > 0:
        types.insert(0, "even")
    return types


def enumerate_homeotypes(limit: int = ENUMERATION_LIMIT) -> List[HomeotypeClass]:
    """穷举 b⁺ ≥ b⁻，b± ≤ limit"""
    classes = []
    for b_plus in range(limit + 1):
        for b_minus in range(b_plus + 1):
            chi, tau = 2 + b_plus + b_minus, b_plus - b_minus
            if (b_plus, b_minus) in SELF_DUAL_BRANCH:
                source = "self_dual_branch"
            elif theorem_b_gate(chi, tau).ok:
                source = "signature_window"
            else:
                continue
            for form_type in _form_types(b_plus, b_minus):
                classes.append(
                    HomeotypeClass(
                        b_plus=b_plus,
                        b_minus=b_minus,
                        chi=chi,
                        tau=tau,
                        form_type=form_type,
                        representative=representative(b_plus, b_minus, form_type),
                        source=source,
                    )
                )
    classes.sort(key=lambda c: (c.chi, c.tau, c.form_type))
    return classes


class PositiveFormCandidates(BaseModel):
    model_config = ConfigDict(frozen=True)

    # b⁻ = 0 时 Hitchin 不等式允许的 b⁺
    hitchin: List[int]
    # 再排除非 Fubini-Study 情形之后剩下的 b⁺
    fubini_study: List[int]


def hitchin_positive_form_candidates(limit: int = ENUMERATION_LIMIT) -> PositiveFormCandidates:
    """b⁻ = 0、b⁺ ≥ 1 的单连通情形：Hitchin 留下 ℂP² 与 ℂP²#ℂP²，正定交叉形式的刚性只留下 ℂP²"""
    hitchin = [b for b in range(1, limit + 1) if hitchin_gate(2 + b, b).ok]
    survivors = [
        b for b in hitchin
        if "Fubini-Study" in theorem_a_gate(TopologyDescriptor(b, 0, simply_connected=True)).conclusion
    ]
    return PositiveFormCandidates(hitchin=hitchin, fubini_study=survivors)


class KahlerEinsteinExample(BaseModel):
    model_config = ConfigDict(frozen=True)

    blowups: int
    manifold: str
    chi: int
    tau: int
    gate: GateResult


def tian_examples() -> List[KahlerEinsteinExample]:
    """ℂP²#kℂ̄P²（3 ≤ k ≤ 8）有 λ > 0 的 Kähler-Einstein 度量，但都不在 9 ≥ χ > (15/4)|τ| 的窗口内"""
    examples = []
    for k in range(3, 9):
        chi, tau = 3 + k, 1 - k
        examples.append(
            KahlerEinsteinExample(
                blowups=k,
                manifold=f"ℂP²#{_blowups(k, 'ℂ̄P²')}",
                chi=chi,
                tau=tau,
                gate=theorem_b_gate(chi, tau),
            )
        )
    return examples


class SelfDualEquality(BaseModel):
    model_config = ConfigDict(frozen=True)

    tau: str
    is_integer: bool


def self_dual_equality_signature() -> SelfDualEquality:
    """χ 上界取等号时 χ = (15/8)τ，与 χ = 2 + τ 联立得 τ = 16/7，不是整数"""
    tau = Fraction(2) / (Fraction(15, 8) - 1)
    return SelfDualEquality(tau=str(tau), is_integer=tau.denominator == 1)
