"""
异常定义模块
所有输入校验失败都抛出 Einstein4Error 的子类；定理分支不适用不算异常，由结果记录标注
"""


class Einstein4Error(ValueError):
    """基础异常"""


class CurvatureInputError(Einstein4Error):
    """曲率算子/分解/二重向量输入不合法"""


class SpinorInputError(Einstein4Error):
    """旋量张量输入不合法"""


class ChartError(Einstein4Error):
    """坐标卡或模型参数不合法"""


class QuadratureError(Einstein4Error):
    """数值积分失败"""

    def __init__(self, message: str, node=None):
        super().__init__(message)
        self.node = node


class TopologyInputError(Einstein4Error):
    """拓扑不变量输入不合法"""


class ReportFormatError(Einstein4Error):
    """不支持的输出格式"""


class DocumentError(Einstein4Error):
    """JSON 文档格式错误"""
