"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: logger.py
@DateTime: 2025-07-02
@Docs: 简洁的日志管理模块
"""

import sys
import time
from functools import wraps
from pathlib import Path

from loguru import logger

from config.app_config import AppConfig


def setup_logger() -> None:
    """配置日志系统

    控制台输出写到 stderr，stdout 只留给命令结果；设置 LOG_DIR 时额外写入滚动日志文件。
    """
    # 移除默认处理器
    logger.remove()

    # 日志格式
    log_format = (
        "<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | "
        "<level>{level: <8}</level> | "
        "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> | "
        "{extra} | <level>{message}</level>"
    )

    # 控制台输出
    logger.add(sys.stderr, format=log_format, level=AppConfig.LOG_LEVEL)

    if not AppConfig.LOG_DIR:
        return

    log_dir = Path(AppConfig.LOG_DIR)
    log_dir.mkdir(parents=True, exist_ok=True)

    # 文件输出 - 所有日志
    logger.add(
        log_dir / "ncc_{time:YYYY-MM-DD}.log",
        format=log_format,
        level="DEBUG",
        rotation="00:00",
        retention="30 days",
        compression="zip",
        encoding="utf-8",
        enqueue=True,
    )

    # 文件输出 - 错误日志
    logger.add(
        log_dir / "ncc_error_{time:YYYY-MM-DD}.log",
        format=log_format,
        level="ERROR",
        rotation="00:00",
        retention="30 days",
        compression="zip",
        encoding="utf-8",
        enqueue=True,
    )


def log_function_calls(*, include_args: bool = False, include_result: bool = False):
    """函数调用日志装饰器，记录耗时

    调用、完成与失败都记为 DEBUG；失败记录附带异常栈后原样抛出，
    由调用方决定是否属于错误（例如 ρ̂ 无定义只是退化情形）。

    Args:
        include_args: 是否记录函数参数
        include_result: 是否记录返回值
    """

    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            bound = logger.bind(function=func.__qualname__)
            if include_args:
                bound = bound.bind(args=f"args={args}, kwargs={kwargs}"[:200])
            bound.debug("开始调用")

            started = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                elapsed = time.perf_counter() - started
                bound.opt(exception=True).debug(f"调用失败 | 耗时: {elapsed:.3f}s | {type(e).__name__}: {e}")
                raise

            elapsed = time.perf_counter() - started
            if include_result:
                bound.debug(f"调用完成 | 耗时: {elapsed:.3f}s | 返回: {str(result)[:200]}")
            else:
                bound.debug(f"调用完成 | 耗时: {elapsed:.3f}s")
            return result

        return wrapper

    return decorator


# 初始化日志系统
setup_logger()

__all__ = ["logger", "log_function_calls"]
