"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: container.py
@DateTime: 2025-07-12
@Docs: 依赖注入容器
"""

from collections.abc import Callable
from typing import Any

from app.utils.logger import logger


class Container:
    """依赖注入容器

    按名称注册服务工厂，支持单例
    """

    def __init__(self):
        """初始化容器"""
        self._factories: dict[str, tuple[Callable[[], Any], bool]] = {}
        self._singletons: dict[str, Any] = {}
        logger.debug("依赖注入容器初始化完成")

    def register(self, name: str, factory: Callable[[], Any], singleton: bool = False) -> None:
        """注册服务

        Args:
            name: 服务名称
            factory: 服务类或无参工厂
            singleton: 是否为单例模式
        """
        self._factories[name] = (factory, singleton)
        self._singletons.pop(name, None)
        logger.debug(f"服务注册: {name} | 工厂: {getattr(factory, '__name__', repr(factory))} | 单例: {singleton}")

    def get(self, name: str) -> Any:
        """获取服务实例

        Raises:
            KeyError: 当服务未注册时
        """
        if name not in self._factories:
            logger.error(f"服务未注册: {name}")
            raise KeyError(f"service {name!r} is not registered")

        factory, is_singleton = self._factories[name]
        if not is_singleton:
            return factory()
        if name not in self._singletons:
            logger.debug(f"创建单例服务实例: {name}")
            self._singletons[name] = factory()
        return self._singletons[name]
