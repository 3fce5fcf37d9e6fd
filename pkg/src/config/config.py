"""
配置加载模块
支持从 config.ini 加载容差、有限差分、求积与日志配置
"""

import os
from configparser import ConfigParser


class Config:
    """全局配置类"""

    # 容差配置
    relative_tol: float = 1e-12
    absolute_tol: float = 1e-12
    eigen_tol: float = 1e-10
    inequality_tol: float = 1e-10

    # 有限差分配置
    fd_step: float = 1e-3
    richardson_levels: int = 2

    # 求积配置
    quad_order: int = 12
    quad_chunk_size: int = 4096
    # 积分等式/不等式比较的相对容差
    quad_tol: float = 1e-4
    # χ、τ 与整数之差的容差
    quad_integer_tol: float = 1e-3

    # 截面曲率极小化配置
    opt_starts: int = 12
    opt_max_iterations: int = 200

    # Einstein 型算子抽查：实例数与每个实例的稠密采样数
    fuzz_instances: int = 100
    fuzz_samples: int = 100000

    # 随机数种子
    seed: int = 20240601

    # 输出格式: json / csv / markdown / text
    output_format: str = "json"

    # 日志配置
    log_cmd_level: str = "WARNING"
    log_file_level: str = "INFO"
    log_limit: str = "2 MB"
    log_backup_count: int = 1

    @classmethod
    def load_config(cls, config_file: str) -> None:
        """加载配置文件并更新配置类属性

        文件不存在时保留默认值；单项解析失败时抛出 ValueError，由调用方决定退出码。

        Args:
            config_file: 配置文件路径
        """
        config = ConfigParser()
        if not os.path.exists(config_file):
            return
        config.read(config_file, encoding="utf8")

        if "tolerance" in config:
            section = config["tolerance"]
            cls.relative_tol = section.getfloat("relative", cls.relative_tol)
            cls.absolute_tol = section.getfloat("absolute", cls.absolute_tol)
            cls.eigen_tol = section.getfloat("eigen", cls.eigen_tol)
            cls.inequality_tol = section.getfloat("inequality", cls.inequality_tol)

        if "finite_difference" in config:
            section = config["finite_difference"]
            cls.fd_step = section.getfloat("step", cls.fd_step)
            cls.richardson_levels = section.getint(
                "richardson_levels", cls.richardson_levels
            )

        if "quadrature" in config:
            section = config["quadrature"]
            cls.quad_order = section.getint("order", cls.quad_order)
            cls.quad_chunk_size = section.getint("chunk_size", cls.quad_chunk_size)
            cls.quad_tol = section.getfloat("tolerance", cls.quad_tol)
            cls.quad_integer_tol = section.getfloat("integer_tolerance", cls.quad_integer_tol)

        if "optimization" in config:
            section = config["optimization"]
            cls.opt_starts = section.getint("starts", cls.opt_starts)
            cls.opt_max_iterations = section.getint(
                "max_iterations", cls.opt_max_iterations
            )

        if "fuzz" in config:
            section = config["fuzz"]
            cls.fuzz_instances = section.getint("instances", cls.fuzz_instances)
            cls.fuzz_samples = section.getint("samples", cls.fuzz_samples)

        if "random" in config:
            cls.seed = config["random"].getint("seed", cls.seed)

        if "output" in config:
            cls.output_format = config["output"].get("format", cls.output_format)

        if "log" in config:
            section = config["log"]
            cls.log_cmd_level = section.get("cmd_level", cls.log_cmd_level)
            cls.log_file_level = section.get("file_level", cls.log_file_level)
            cls.log_limit = section.get("limit", cls.log_limit)
            cls.log_backup_count = section.getint("backup_count", cls.log_backup_count)

    @classmethod
    def as_dict(cls) -> dict:
        """导出当前配置（用于报告中的配置回显）"""
        return {
            "relative_tol": cls.relative_tol,
            "absolute_tol": cls.absolute_tol,
            "eigen_tol": cls.eigen_tol,
            "inequality_tol": cls.inequality_tol,
            "fd_step": cls.fd_step,
            "richardson_levels": cls.richardson_levels,
            "quad_order": cls.quad_order,
            "quad_chunk_size": cls.quad_chunk_size,
            "quad_tol": cls.quad_tol,
            "quad_integer_tol": cls.quad_integer_tol,
            "opt_starts": cls.opt_starts,
            "opt_max_iterations": cls.opt_max_iterations,
            "fuzz_instances": cls.fuzz_instances,
            "fuzz_samples": cls.fuzz_samples,
            "seed": cls.seed,
            "output_format": cls.output_format,
        }
