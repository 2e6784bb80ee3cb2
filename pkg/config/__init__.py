"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: __init__.py
@DateTime: 2025-07-02
@Docs: 配置模块初始化
"""

from .app_config import AppConfig
from .file_config import FileConfig
from .model_config import ModelConfig

__all__ = ["AppConfig", "FileConfig", "ModelConfig"]
