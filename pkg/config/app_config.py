"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: app_config.py
@DateTime: 2025-07-02
@Docs: 应用程序相关配置
"""

import os

from dotenv import load_dotenv

load_dotenv()


class AppConfig:
    """应用配置类"""

    # 应用元信息
    APP_NAME = "ncc"
    APP_VERSION = "0.1.0"
    APP_DESCRIPTION = "归一化聚类系数网络分析工具"

    # 可复现性: 未显式给出 --seed 时使用的固定种子
    DEFAULT_SEED = int(os.getenv("NCC_SEED", "20190601"))

    # 并行配置（0 表示按物理核数自动选择）
    DEFAULT_WORKERS = int(os.getenv("NCC_WORKERS", "1"))

    # 输出配置
    DEFAULT_FORMAT = "json"
    OUTPUT_FORMATS = ["json", "csv"]

    # 日志配置
    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()
    LOG_DIR = os.getenv("LOG_DIR", "")
