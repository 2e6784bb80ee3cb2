"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: run.py
@DateTime: 2025-07-13
@Docs: 应用主编排器: 管理依赖注入、子命令注册与命令行入口
"""

import argparse
import sys
from collections.abc import Sequence
from dataclasses import dataclass

from app.base.base_command import CommandOutput, build_metadata
from app.commands import ALL_COMMANDS
from app.core.container import Container
from app.core.error_handler import EXIT_FAILURE, EXIT_OK, ErrorHandler
from app.core.registry import CommandRegistry
from app.core.service_manager import ServiceManager
from app.handlers.export_handler import ExportHandler
from app.handlers.file_handler import FileHandler
from app.utils.logger import log_function_calls, logger
from app.utils.resource_manager import ResourceManager
from config.app_config import AppConfig

_INPUT_KEYS = ("input", "first", "second", "manifest", "config")


@dataclass(frozen=True)
class RunConfig:
    """一次命令行运行的公共配置

    Attributes:
        command: 子命令路径，例如 ``gen dcbm``
        inputs: 输入文件
        output: 输出路径，None 表示标准输出
        seed: 随机种子
        fmt: 输出格式
        workers: 进程数（已解析，≥ 1）
    """

    command: str
    inputs: tuple[str, ...]
    output: str | None
    seed: int
    fmt: str
    workers: int

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        inputs = tuple(str(getattr(args, key)) for key in _INPUT_KEYS if getattr(args, key, None))
        return cls(
            command=args.command_path,
            inputs=inputs,
            output=args.output,
            seed=args.seed,
            fmt=args.format,
            workers=args.workers,
        )


class AppOrchestrator:
    """应用主编排器

    负责管理依赖注入与子命令注册，解析命令行并分派执行
    """

    def __init__(self):
        """初始化编排器"""
        self.container = Container()
        self.command_registry = CommandRegistry()

        self._setup_dependencies()
        self._register_commands()

        ServiceManager.initialize(self.container)
        self.parser = self._build_parser()
        logger.debug("应用编排器初始化完成")

    def _setup_dependencies(self) -> None:
        """设置依赖注入"""
        services = [
            ("file_handler", FileHandler),
            ("export_handler", ExportHandler),
            ("resource_manager", ResourceManager),
        ]
        for name, service_class in services:
            self.container.register(name, service_class, singleton=True)
        logger.debug(f"依赖注入设置完成，共注册 {len(services)} 个服务")

    def _register_commands(self) -> None:
        """注册子命令"""
        for command_class in ALL_COMMANDS:
            self.command_registry.register_command(command_class)
        logger.debug(f"子命令注册完成: {self.command_registry.get_command_names()}")

    @staticmethod
    def _common_parser() -> argparse.ArgumentParser:
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--seed", type=int, default=AppConfig.DEFAULT_SEED, help="随机种子")
        common.add_argument("--format", choices=AppConfig.OUTPUT_FORMATS, default=AppConfig.DEFAULT_FORMAT, help="输出格式")
        common.add_argument("--output", "-o", default=None, help="输出路径（缺省为标准输出）")
        common.add_argument(
            "--workers", type=int, default=AppConfig.DEFAULT_WORKERS, help="并行进程数，0 表示按物理核数自动选择"
        )
        return common

    def _build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(prog=AppConfig.APP_NAME, description=AppConfig.APP_DESCRIPTION)
        parser.add_argument("--version", action="version", version=f"%(prog)s {AppConfig.APP_VERSION}")
        subparsers = parser.add_subparsers(dest="command", required=True)
        common = self._common_parser()
        for name in self.command_registry.get_command_names():
            self.command_registry.load_command(name).configure(subparsers, common)
        return parser

    def parse(self, argv: Sequence[str] | None) -> argparse.Namespace | int:
        """解析命令行；用法错误返回退出码 1（argparse 自身的退出码 2 与统计量退化冲突）"""
        try:
            return self.parser.parse_args(argv)
        except SystemExit as e:
            return EXIT_OK if e.code in (0, None) else EXIT_FAILURE

    def _execute(self, args: argparse.Namespace) -> int:
        config = RunConfig.from_args(args)
        logger.info(f"执行命令: {config.command} | 输入: {list(config.inputs)} | 种子: {config.seed} | 进程数: {config.workers}")
        output: CommandOutput = args.run(args)
        exporter = ServiceManager.export_handler()
        if output.text is not None:
            exporter.emit(output.text, config.output)
        else:
            exporter.write(output.payload, output.table, build_metadata(args), fmt=config.fmt, output=config.output)
        return output.exit_code

    @log_function_calls()
    def run(self, argv: Sequence[str] | None = None) -> int:
        """运行一次命令

        Args:
            argv: 命令行参数（不含程序名），None 时取 sys.argv

        Returns:
            退出码: 0 成功，2 统计量退化，1 其他失败
        """
        parsed = self.parse(argv)
        if isinstance(parsed, int):
            return parsed
        try:
            parsed.workers = ServiceManager.resource_manager().resolve_workers(parsed.workers)
        except ValueError as e:
            return ErrorHandler.handle_exception(e, context="参数解析")
        return ErrorHandler.run(self._execute, parsed, context=f"命令 {parsed.command_path} ")


def main(argv: Sequence[str] | None = None) -> int:
    """命令行入口"""
    return AppOrchestrator().run(argv)


if __name__ == "__main__":
    sys.exit(main())
