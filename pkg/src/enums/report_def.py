"""
报告相关枚举
"""
from enum import Enum


class Provenance(Enum):
    """期望值来源"""

    PAPER = "PAPER"  # 文献中直接给出的数值或陈述
    TRIVIAL = "TRIVIAL"  # 由定义直接得到
    DERIVED = "DERIVED"  # 由闭式计算、独立算法或模糊测试得到


class OutputFormat(Enum):
    Json = "json"
    Csv = "csv"
    Markdown = "markdown"
    Text = "text"


class CheckStatus(Enum):
    Passed = "passed"
    Failed = "failed"
    # 定理条件不满足时只报告不判定
    NotApplicable = "not_applicable"


class Orientation(Enum):
    Standard = "standard"
    # 反转定向：W⁺ 与 W⁻ 互换，τ 变号
    Reversed = "reversed"
