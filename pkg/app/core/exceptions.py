"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: exceptions.py
@DateTime: 2025-07-02
@Docs: 异常定义
"""

import math


class GraphAnalyticsError(ValueError):
    """所有领域异常的基类"""


class EdgeListParseError(GraphAnalyticsError):
    """边列表/标签/清单文件解析失败，携带文件路径与行号"""

    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        location = ""
        if path is not None:
            location = f"{path}:{line}: " if line is not None else f"{path}: "
        super().__init__(f"{location}{message}")


class InvalidNodeError(GraphAnalyticsError):
    """节点编号越界或非法"""


class DegenerateGraph(GraphAnalyticsError):
    """图太小（n < 3），统计量无定义"""


class RhoUndefined(GraphAnalyticsError):
    """没有楔形（W = 0），ρ̂ 与聚类系数无定义"""


class DegenerateStatistic(GraphAnalyticsError):
    """检验统计量退化（例如没有三角形或平均度为 0）"""


class OutOfRange(GraphAnalyticsError):
    """逆映射输入超出可逆区间

    Attributes:
        boundary: 对应的边界值（ρ ≤ 1 时为 1.0，ρ ≥ K 时为 +inf）
    """

    def __init__(self, message: str, boundary: float = math.nan):
        self.boundary = boundary
        super().__init__(message)


class InfeasibleParameters(GraphAnalyticsError):
    """生成器参数不可行（例如推导出的 p > 1）"""


class InvalidDistribution(GraphAnalyticsError):
    """概率分布参数非法"""


class SamplingError(GraphAnalyticsError):
    """采样规格无法满足"""


class LabelMismatch(GraphAnalyticsError):
    """标签长度与节点数不一致"""


class EmptyRecordSet(GraphAnalyticsError):
    """联署记录为空"""


# 这些异常对应 CLI 退出码 2
DEGENERATE_ERRORS = (DegenerateGraph, RhoUndefined, DegenerateStatistic)
