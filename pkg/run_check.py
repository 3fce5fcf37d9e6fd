# -*- coding: utf-8 -
import sys

from src.cli.app import run


if __name__ == "__main__":
    # 退出码：0 通过，1 有检查失败，2 用法或输入错误
    sys.exit(run(sys.argv[1:]))
