"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: registry.py
@DateTime: 2025-07-12
@Docs: 子命令注册管理器
"""

from app.base.base_command import BaseCommand
from app.utils.logger import logger


class CommandRegistry:
    """子命令注册管理器

    管理所有可用子命令的注册和加载
    """

    def __init__(self):
        """初始化注册器"""
        self._commands: dict[str, type[BaseCommand]] = {}
        logger.debug("命令注册器初始化完成")

    def register_command(self, command_class: type[BaseCommand]) -> None:
        """注册子命令

        Raises:
            ValueError: 名称重复
        """
        name = command_class.name
        if name in self._commands:
            raise ValueError(f"command {name!r} is already registered")
        self._commands[name] = command_class
        logger.debug(f"命令注册成功: {name} | 类: {command_class.__name__}")

    def load_command(self, name: str) -> BaseCommand:
        """加载子命令实例

        Raises:
            KeyError: 当命令未注册时
        """
        if name not in self._commands:
            logger.error(f"命令未注册: {name}")
            raise KeyError(f"command {name!r} is not registered")
        return self._commands[name]()

    def get_command_names(self) -> list[str]:
        return list(self._commands)
