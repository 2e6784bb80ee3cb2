"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: error_handler.py
@DateTime: 2025-07-12
@Docs: 错误处理: 异常到退出码的映射
"""

import sys
from collections.abc import Callable
from typing import Any

from app.core.exceptions import DEGENERATE_ERRORS
from app.utils.logger import logger

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_DEGENERATE = 2


class ErrorHandler:
    """错误处理器

    统一把异常转换为退出码，向 stderr 输出一行错误信息，并记录日志
    """

    @staticmethod
    def exit_code_for(e: BaseException) -> int:
        """异常对应的退出码: 统计量退化为 2，其余失败为 1"""
        if isinstance(e, DEGENERATE_ERRORS):
            return EXIT_DEGENERATE
        return EXIT_FAILURE

    @staticmethod
    def show_error(message: str) -> None:
        """向 stderr 输出一行错误信息

        Args:
            message: 错误消息
        """
        print(f"error: {message}", file=sys.stderr)

    @staticmethod
    def handle_exception(e: Exception, context: str = "命令") -> int:
        """处理异常，返回退出码

        Args:
            e: 异常对象
            context: 操作上下文描述

        Returns:
            退出码
        """
        code = ErrorHandler.exit_code_for(e)
        if code == EXIT_DEGENERATE:
            logger.warning(f"{context}统计量退化 | 异常类型: {type(e).__name__} | 异常信息: {e}")
        else:
            logger.exception(f"{context}执行失败 | 异常类型: {type(e).__name__} | 异常信息: {e}")
        ErrorHandler.show_error(f"{type(e).__name__}: {e}")
        return code

    @staticmethod
    def run(func: Callable[..., int], *args: Any, context: str = "命令", **kwargs: Any) -> int:
        """安全执行命令并返回退出码

        Args:
            func: 返回退出码的可调用对象
            context: 操作上下文描述

        Returns:
            退出码
        """
        func_name = getattr(func, "__name__", str(func))
        logger.debug(f"开始执行: {func_name}")
        try:
            code = func(*args, **kwargs)
        except Exception as e:
            return ErrorHandler.handle_exception(e, context)
        logger.debug(f"执行结束: {func_name} | 退出码: {code}")
        return code
