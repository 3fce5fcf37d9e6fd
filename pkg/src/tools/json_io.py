import json
import os
import sys
from typing import Any, Optional

import numpy as np

from src.errors import DocumentError


def read_json(path: Optional[str]) -> Any:
    """读取 JSON 文档

    Args:
        path: 文件路径；None 或 "-" 表示从标准输入读取

    Returns:
        解析后的 Python 对象
    """
    if path in (None, "-"):
        text = sys.stdin.read()
        source = "<stdin>"
    else:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
        source = path
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"{source} 不是合法的 JSON: {e.msg} (行 {e.lineno}, 列 {e.colno})")


def read_matrix(doc: Any, shape=(6, 6)) -> np.ndarray:
    """从 {"matrix": [[...]]} 或裸二维数组中取出实矩阵"""
    rows = doc.get("matrix") if isinstance(doc, dict) else doc
    try:
        matrix = np.asarray(rows, dtype=float)
    except (TypeError, ValueError) as e:
        raise DocumentError(f"矩阵元素必须是实数: {e}")
    if matrix.shape != tuple(shape):
        raise DocumentError(f"矩阵形状应为 {tuple(shape)}, 实际 {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise DocumentError("矩阵含有非有限值")
    return matrix


def write_bytes(data: bytes, path: Optional[str]) -> None:
    """写入文件（自动创建目录）；path 为空时写到标准输出"""
    if not path or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
        return
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    with open(path, "wb") as f:
        f.write(data)
