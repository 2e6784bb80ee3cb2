"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: export_handler.py
@DateTime: 2025-07-12
@Docs: 导出处理器: 命令结果的 JSON / CSV 输出
"""

import json
import math
import sys
from dataclasses import asdict, is_dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np
import polars as pl

from app.base.base_exporter import BaseExporter
from app.utils.logger import log_function_calls, logger
from config.app_config import AppConfig
from config.file_config import FileConfig


def to_jsonable(value: Any) -> Any:
    """转换为可 JSON 序列化的值；非有限浮点数与未定义统计量输出为 null"""
    if value is None or isinstance(value, bool | str):
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, int | np.integer):
        return int(value)
    if isinstance(value, float | np.floating | Fraction):
        value = float(value)
        return value if math.isfinite(value) else None
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()]
    if isinstance(value, pl.DataFrame):
        return [to_jsonable(row) for row in value.to_dicts()]
    if is_dataclass(value) and not isinstance(value, type):
        return to_jsonable(value.to_dict() if hasattr(value, "to_dict") else asdict(value))
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, list | tuple | set | frozenset):
        items = sorted(value, key=str) if isinstance(value, set | frozenset) else value
        return [to_jsonable(v) for v in items]
    if isinstance(value, Path):
        return str(value)
    raise TypeError(f"cannot serialize value of type {type(value).__name__}")


class JsonExporter(BaseExporter):
    """JSON 导出: 元数据与结果合并为一个对象，键排序以保证输出逐字节确定"""

    format_name = "json"

    def export(self, payload: dict[str, Any], table: pl.DataFrame | None, metadata: dict[str, Any]) -> str:
        document = {"metadata": to_jsonable(metadata), "result": to_jsonable(payload)}
        if table is not None:
            document["table"] = to_jsonable(table)
        return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


class CsvExporter(BaseExporter):
    """CSV 导出: 有表格结果时输出表格，否则把结构化结果展平为单行"""

    format_name = "csv"

    def export(self, payload: dict[str, Any], table: pl.DataFrame | None, metadata: dict[str, Any]) -> str:
        if table is None:
            flat = {k: v for k, v in to_jsonable(payload).items() if not isinstance(v, dict | list)}
            table = pl.DataFrame([flat])
        return table.write_csv(null_value="")


EXPORTERS: dict[str, type[BaseExporter]] = {cls.format_name: cls for cls in (JsonExporter, CsvExporter)}


class ExportHandler:
    """导出处理器

    按格式选择导出器，写到文件或标准输出
    """

    def __init__(self):
        """初始化导出处理器"""
        self.supported_formats = list(AppConfig.OUTPUT_FORMATS)
        logger.debug(f"导出处理器初始化完成 | 支持格式: {', '.join(self.supported_formats)}")

    def get_exporter(self, fmt: str) -> BaseExporter:
        if fmt not in EXPORTERS:
            raise ValueError(f"unsupported output format {fmt!r}; expected one of {self.supported_formats}")
        return EXPORTERS[fmt]()

    def render(
        self, payload: dict[str, Any], table: pl.DataFrame | None, metadata: dict[str, Any], fmt: str
    ) -> str:
        return self.get_exporter(fmt).export(payload, table, metadata)

    @log_function_calls(include_args=True)
    def write(
        self,
        payload: dict[str, Any],
        table: pl.DataFrame | None,
        metadata: dict[str, Any],
        fmt: str = AppConfig.DEFAULT_FORMAT,
        output: str | Path | None = None,
    ) -> str:
        """渲染并输出结果

        Args:
            payload: 结构化结果
            table: 表格结果
            metadata: 运行元数据
            fmt: json / csv
            output: 输出路径，None 或 ``-`` 表示标准输出

        Returns:
            渲染后的文本
        """
        return self.emit(self.render(payload, table, metadata, fmt), output)

    def emit(self, text: str, output: str | Path | None = None) -> str:
        """把文本写到文件或标准输出（None 或 ``-``）"""
        if output is None or str(output) == "-":
            sys.stdout.write(text)
            sys.stdout.flush()
        else:
            path = Path(output)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding=FileConfig.ENCODING)
            logger.info(f"结果已写出: {path} | 大小: {len(text)} 字符")
        return text

    @log_function_calls(include_args=True)
    def write_table(self, table: pl.DataFrame, path: str | Path) -> Path:
        """单独写出一张 CSV 表（例如逐次重复长表）"""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        table.write_csv(path, null_value="")
        logger.info(f"表格已写出: {path} | 行数: {table.height} | 列数: {table.width}")
        return path
