"""
拓扑描述：Betti 数与由此决定的 χ、τ
"""

from dataclasses import dataclass
from fractions import Fraction

from src.errors import TopologyInputError


def require_integer(name: str, value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        if isinstance(value, Fraction) and value.denominator == 1:
            return int(value)
        raise TopologyInputError(f"{name} 必须是整数, 实际 {value!r}")
    return value


def check_parity(chi: int, tau: int) -> None:
    """b₁ = 0 时 χ ≡ τ (mod 2)"""
    chi = require_integer("χ", chi)
    tau = require_integer("τ", tau)
    if (chi - tau) % 2:
        raise TopologyInputError(f"χ = {chi} 与 τ = {tau} 奇偶性不同，不是 b₁ = 0 的四维流形")


@dataclass(frozen=True)
class TopologyDescriptor:
    b_plus: int
    b_minus: int
    b_one: int = 0
    orientable: bool = True
    simply_connected: bool = False
    finite_pi1: bool = True

    def __post_init__(self):
        for name in ("b_plus", "b_minus", "b_one"):
            value = require_integer(name, getattr(self, name))
            if value < 0:
                raise TopologyInputError(f"{name} 不能为负: {value}")
        if self.simply_connected and not self.finite_pi1:
            raise TopologyInputError("单连通流形的基本群是有限的")
        if self.finite_pi1 and self.b_one != 0:
            raise TopologyInputError(f"基本群有限时 b₁ = 0, 实际 b₁ = {self.b_one}")

    @property
    def b_two(self) -> int:
        return self.b_plus + self.b_minus

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.b_one + self.b_plus + self.b_minus

    @property
    def signature(self) -> int:
        return self.b_plus - self.b_minus

    def reversed(self) -> "TopologyDescriptor":
        """反转定向交换 b⁺ 与 b⁻"""
        return TopologyDescriptor(
            b_plus=self.b_minus,
            b_minus=self.b_plus,
            b_one=self.b_one,
            orientable=self.orientable,
            simply_connected=self.simply_connected,
            finite_pi1=self.finite_pi1,
        )

    def to_dict(self) -> dict:
        return {
            "b_plus": self.b_plus,
            "b_minus": self.b_minus,
            "b_one": self.b_one,
            "orientable": self.orientable,
            "simply_connected": self.simply_connected,
            "finite_pi1": self.finite_pi1,
            "euler_characteristic": self.euler_characteristic,
            "signature": self.signature,
        }
