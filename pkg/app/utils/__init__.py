"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: __init__.py
@DateTime: 2025-07-02
@Docs: 工具模块: 日志、并行、资源与参数校验
"""

from .logger import log_function_calls, logger
from .parallel import derive_rng, derive_seed, parallel_map

__all__ = ["derive_rng", "derive_seed", "log_function_calls", "logger", "parallel_map"]
