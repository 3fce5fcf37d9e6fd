import inspect
import os
import sys
from typing import Optional, Union

from loguru import logger

LOG_COLORS = {
    "DEBUG": "\033[1;36m",  # CYAN
    "INFO": "\033[1;32m",  # GREEN
    "WARNING": "\033[1;33m",  # YELLOW
    "ERROR": "\033[1;31m",  # RED
    "CRITICAL": "\033[1;31m",  # RED
}
COLOR_RESET = "\033[1;0m"


class Log:
    """loguru 封装：每个日志文件一个实例，控制台与文件两个 sink 按 task 过滤"""

    # 静态标记：确保只移除一次默认 handler
    _default_handler_removed = False

    def __init__(
        self,
        filename: str,
        cmdlevel: str = "WARNING",
        filelevel: str = "INFO",
        backup_count: int = 1,
        limit: Union[int, str] = "2 MB",
        colorful: bool = True,
        is_backtrace: bool = True,
    ):
        if not Log._default_handler_removed:
            logger.remove()
            Log._default_handler_removed = True

        self.is_backtrace = is_backtrace
        self.colorful = colorful
        self.task = filename
        self.logger = logger.bind(task=filename, check="-")

        log_dir = os.path.abspath(os.path.dirname(filename))
        os.makedirs(log_dir, exist_ok=True)

        # 控制台输出：stdout 留给 CLI 数据，日志只走 stderr
        self.logger.add(
            sys.stderr,
            level=cmdlevel,
            format=self._formatter,
            colorize=False,
            backtrace=True,
            filter=lambda record: record["extra"].get("task") == filename,
        )

        self.logger.add(
            filename,
            level=filelevel,
            format=self._plain_formatter,
            backtrace=True,
            rotation=self._get_rotation_config(limit),
            retention=backup_count,
            filter=lambda record: record["extra"].get("task") == filename,
        )

    def _caller_info(self, record) -> str:
        if not self.is_backtrace:
            return f"[{record['file']}:{record['line']}]"
        frame = inspect.currentframe()
        while frame:
            if (
                "loguru" not in frame.f_code.co_filename
                and "logger.py" not in frame.f_code.co_filename
            ):
                break
            frame = frame.f_back
        if frame is None:
            return f"[{record['file']}:{record['function']}:{record['line']}]"
        return f"[{os.path.basename(frame.f_code.co_filename)}:{frame.f_code.co_name}:{frame.f_lineno}]"

    def _line(self, record) -> str:
        # loguru 会对返回的格式串再做一次 format，花括号需要转义
        message = str(record["message"]).replace("{", "{{").replace("}", "}}")
        check = record["extra"].get("check", "-")
        tag = f"[{check}]" if check != "-" else ""
        return (
            f"[{record['time'].strftime('%Y-%m-%d %H:%M:%S.%f')[:-3]}] "
            + self._caller_info(record)
            + f"[{record['level']}]{tag} {message}"
        )

    def _formatter(self, record) -> str:
        if not self.colorful:
            return self._line(record) + "\n"
        level_color = LOG_COLORS.get(record["level"].name, "")
        return f"{level_color}{self._line(record)}{COLOR_RESET}\n"

    def _plain_formatter(self, record) -> str:
        return self._line(record) + "\n"

    @staticmethod
    def _get_rotation_config(limit: Union[int, str]) -> str:
        if isinstance(limit, int):
            return f"{limit / 1024 / 1024} MB"
        return limit

    def bind_check(self, check_id: str) -> "Log":
        """返回附带校验项编号的日志视图，报告生成时逐项追踪"""
        view = object.__new__(Log)
        view.is_backtrace = self.is_backtrace
        view.colorful = self.colorful
        view.task = self.task
        view.logger = self.logger.bind(check=check_id)
        return view

    def debug(self, *args, **kwargs):
        self.logger.debug(*args, **kwargs)

    def info(self, *args, **kwargs):
        self.logger.info(*args, **kwargs)

    def warning(self, *args, **kwargs):
        self.logger.warning(*args, **kwargs)

    def error(self, *args, **kwargs):
        self.logger.error(*args, **kwargs)

    def critical(self, *args, **kwargs):
        self.logger.critical(*args, **kwargs)

    def exception(self, *args, **kwargs):
        self.logger.exception(*args, **kwargs)
