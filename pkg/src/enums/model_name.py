"""
模型名称模块
命令行 --model 取值与模型构造参数的单一数据源
"""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Tuple

from src.errors import ChartError


@dataclass(frozen=True)
class ModelInfo:
    """模型配置数据类

    Attributes:
        key: 命令行名称，如 "cp2"
        name: 目录中的构造函数名
        description: 中文描述
        parameters: 构造参数名及默认值
    """
    key: str
    name: str
    description: str
    parameters: Tuple[Tuple[str, float], ...]

    @property
    def defaults(self) -> Dict[str, float]:
        return dict(self.parameters)


class ModelName(Enum):
    """目录中的模型"""

    S4 = ModelInfo("s4", "round_sphere", "圆球面 S⁴(a)", (("radius", 1.0),))
    CP2 = ModelInfo("cp2", "fubini_study", "Fubini-Study 度量的 ℂP²", ())
    S2XS2 = ModelInfo("s2xs2", "product_spheres", "乘积 S²(a)×S²(b)", (("a", 1.0), ("b", 1.0)))
    T4 = ModelInfo("t4", "flat_torus", "平坦环面 T⁴", (("side", 1.0),))


class Models:
    """模型名称工具类"""

    _KEY_MAP: Dict[str, ModelName] = {item.value.key: item for item in ModelName}

    @classmethod
    def get(cls, key: str) -> ModelName:
        try:
            return cls._KEY_MAP[key.lower()]
        except KeyError:
            raise ChartError(f"未知模型: {key}, 可选 {cls.keys()}")

    @classmethod
    def keys(cls) -> list:
        return list(cls._KEY_MAP)
