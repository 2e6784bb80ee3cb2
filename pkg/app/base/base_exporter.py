"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: base_exporter.py
@DateTime: 2025-07-12
@Docs: 导出器基础接口定义
"""

from abc import ABC, abstractmethod
from typing import Any

import polars as pl


class BaseExporter(ABC):
    """导出器基础接口

    定义命令结果导出器必须实现的基础方法
    """

    format_name: str = ""

    @abstractmethod
    def export(self, payload: dict[str, Any], table: pl.DataFrame | None, metadata: dict[str, Any]) -> str:
        """导出命令结果

        Args:
            payload: 结构化结果
            table: 表格结果，没有时为 None
            metadata: {version, command, seed, params}

        Returns:
            导出的文本
        """
        pass
