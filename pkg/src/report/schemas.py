"""
运行配置与报告结构
JSON 输出按 schema_version 保持稳定；不含时间戳，同一配置与种子输出字节一致。
"""

import math
import platform
from typing import Any, Dict, List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.config.config import Config
from src.enums.report_def import CheckStatus, OutputFormat, Provenance

SCHEMA_VERSION = "1.0"
TOOL_NAME = "einstein4-check"


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    subcommand: str
    model: Optional[str] = None
    quad_order: int = Field(default_factory=lambda: Config.quad_order, ge=2)
    fd_step: float = Field(default_factory=lambda: Config.fd_step, gt=0)
    tol: float = Field(default_factory=lambda: Config.quad_tol, gt=0)
    seed: int = Field(default_factory=lambda: Config.seed)
    output_format: OutputFormat = Field(default_factory=lambda: OutputFormat(Config.output_format))
    output: Optional[str] = None

    @field_validator("fd_step", "tol")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError(f"必须是有限数: {value}")
        return value

    def apply(self) -> None:
        """把命令行覆盖写回全局 Config"""
        Config.quad_order = self.quad_order
        Config.fd_step = self.fd_step
        Config.quad_tol = self.tol
        Config.seed = self.seed
        Config.output_format = self.output_format.value

    def echo(self) -> Dict[str, Any]:
        return {
            "subcommand": self.subcommand,
            "model": self.model,
            "quad_order": self.quad_order,
            "fd_step": self.fd_step,
            "tol": self.tol,
            "seed": self.seed,
            "output_format": self.output_format.value,
        }


def _json_safe(value: Any) -> Any:
    """非有限浮点写成 null，numpy 标量转成 Python 数"""
    if isinstance(value, dict):
        return {str(k): _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if isinstance(value, np.ndarray):
        return _json_safe(value.tolist())
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


class CheckRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    suite: str
    check_id: str
    # 所验证的数学陈述
    anchor: str
    computed: Dict[str, Any]
    expected: Dict[str, Any]
    provenance: Provenance
    margin: Optional[float] = None
    status: CheckStatus
    detail: str = ""

    @field_validator("computed", "expected")
    @classmethod
    def _sanitize(cls, value: Dict[str, Any]) -> Dict[str, Any]:
        return _json_safe(value)

    @field_validator("margin")
    @classmethod
    def _margin(cls, value: Optional[float]) -> Optional[float]:
        if value is None or not math.isfinite(value):
            return None
        return float(value)


class Summary(BaseModel):
    model_config = ConfigDict(frozen=True)

    total: int
    passed: int
    failed: int
    not_applicable: int


class PaperReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    schema_version: str = SCHEMA_VERSION
    tool: str = TOOL_NAME
    toolchain: Dict[str, str]
    config: Dict[str, Any]
    records: List[CheckRecord]
    summary: Summary
    # 子命令的主文档（分解结果、同胚型表等），report 子命令为空
    payload: Optional[Any] = None

    @classmethod
    def build(cls, run: RunConfig, records: List[CheckRecord], payload: Any = None) -> "PaperReport":
        counts = {status: 0 for status in CheckStatus}
        for item in records:
            counts[item.status] += 1
        return cls(
            toolchain=toolchain(),
            config={"run": run.echo(), "settings": Config.as_dict()},
            records=records,
            summary=Summary(
                total=len(records),
                passed=counts[CheckStatus.Passed],
                failed=counts[CheckStatus.Failed],
                not_applicable=counts[CheckStatus.NotApplicable],
            ),
            payload=_json_safe(payload),
        )

    @property
    def exit_code(self) -> int:
        return 1 if self.summary.failed else 0

    def suites(self) -> List[str]:
        seen: List[str] = []
        for item in self.records:
            if item.suite not in seen:
                seen.append(item.suite)
        return seen


def toolchain() -> Dict[str, str]:
    return {"python": platform.python_version(), "numpy": np.__version__}
