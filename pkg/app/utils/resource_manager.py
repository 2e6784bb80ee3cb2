"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: resource_manager.py
@DateTime: 2025-07-03
@Docs: 计算资源管理工具
"""

import psutil

from app.utils.logger import logger


class ResourceManager:
    """资源管理器

    提供进程数解析和内存监控功能
    """

    @staticmethod
    def resolve_workers(requested: int) -> int:
        """解析并行进程数

        Args:
            requested: 用户请求的进程数，0 表示自动

        Returns:
            实际使用的进程数（至少为 1）
        """
        if requested < 0:
            raise ValueError(f"workers must be >= 0, got {requested}")
        if requested > 0:
            return requested
        cores = psutil.cpu_count(logical=False) or psutil.cpu_count() or 1
        logger.info(f"自动选择进程数: {cores}")
        return cores

    @staticmethod
    def estimate_pair_block_mb(rows: int, n: int) -> float:
        """估算生成器单个行块的内存需求（MB）

        每个行块同时持有概率矩阵与均匀随机数矩阵（float64）。
        """
        return rows * n * 8 * 2 / 1024 / 1024

    @staticmethod
    def check_memory_available(required_mb: float) -> bool:
        """检查是否有足够内存

        Args:
            required_mb: 需要的内存大小（MB）

        Returns:
            是否有足够内存
        """
        available_mb = psutil.virtual_memory().available / 1024 / 1024
        if available_mb <= required_mb:
            logger.warning(f"可用内存不足 | 需要: {required_mb:.1f} MB | 可用: {available_mb:.1f} MB")
            return False
        return True

    @staticmethod
    def get_memory_info() -> dict:
        """获取详细内存信息"""
        memory = psutil.virtual_memory()
        return {
            "total_mb": memory.total / 1024 / 1024,
            "available_mb": memory.available / 1024 / 1024,
            "used_mb": memory.used / 1024 / 1024,
            "usage_percent": memory.percent,
        }
