"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: service_manager.py
@DateTime: 2025-07-12
@Docs: 全局服务管理器
"""

from typing import TYPE_CHECKING, Any

from app.core.container import Container

if TYPE_CHECKING:
    from app.handlers.export_handler import ExportHandler
    from app.handlers.file_handler import FileHandler
    from app.utils.resource_manager import ResourceManager


class ServiceManager:
    """全局服务管理器

    命令通过这里取得文件、导出与资源服务
    """

    _container: Container | None = None

    @classmethod
    def initialize(cls, container: Container) -> None:
        cls._container = container

    @classmethod
    def get_service(cls, name: str) -> Any:
        """获取服务实例

        Raises:
            RuntimeError: 服务管理器未初始化
            KeyError: 服务未注册
        """
        if cls._container is None:
            raise RuntimeError("service manager is not initialized")
        return cls._container.get(name)

    @classmethod
    def file_handler(cls) -> "FileHandler":
        return cls.get_service("file_handler")

    @classmethod
    def export_handler(cls) -> "ExportHandler":
        return cls.get_service("export_handler")

    @classmethod
    def resource_manager(cls) -> "ResourceManager":
        return cls.get_service("resource_manager")
