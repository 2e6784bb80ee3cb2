"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: __init__.py
@DateTime: 2025-07-13
@Docs: 输入输出处理层: 文件读写与结果导出
"""

from .export_handler import ExportHandler, to_jsonable
from .file_handler import EdgeListData, FileHandler

__all__ = ["EdgeListData", "ExportHandler", "FileHandler", "to_jsonable"]
