"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: base_command.py
@DateTime: 2025-07-12
@Docs: 子命令基础接口定义
"""

import argparse
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any

import polars as pl

from config.app_config import AppConfig

# 所有子命令共有、不计入元数据 params 的参数
COMMON_KEYS = frozenset({"seed", "format", "output", "workers", "command_path", "handler", "run"})


@dataclass
class CommandOutput:
    """子命令的执行结果

    Attributes:
        payload: 结构化结果，按 --format 导出
        table: 表格结果，CSV 格式时输出这张表
        text: 原样输出的文本（例如生成的边列表），给出时不经过导出器
        exit_code: 退出码
    """

    payload: dict[str, Any] = field(default_factory=dict)
    table: pl.DataFrame | None = None
    text: str | None = None
    exit_code: int = 0


class BaseCommand(ABC):
    """子命令基础接口

    定义所有子命令必须实现的基础方法
    """

    name: str = ""

    @abstractmethod
    def get_description(self) -> str:
        """获取命令描述"""
        pass

    @abstractmethod
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """向解析器添加命令自己的参数"""
        pass

    @abstractmethod
    def execute(self, args: argparse.Namespace) -> CommandOutput:
        """执行命令

        Args:
            args: 解析后的参数，包含公共参数 seed/format/output/workers

        Returns:
            命令结果
        """
        pass

    def configure(self, subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
        """注册到顶层子命令解析器；带二级动作的命令覆盖此方法"""
        parser = subparsers.add_parser(self.name, help=self.get_description(), parents=[common])
        self.add_arguments(parser)
        parser.set_defaults(run=self.execute, command_path=self.name)

    @staticmethod
    def get_params(args: argparse.Namespace) -> dict[str, Any]:
        """元数据中的 params: 除公共参数外的全部命令行参数"""
        return {k: v for k, v in sorted(vars(args).items()) if k not in COMMON_KEYS}


def build_metadata(args: argparse.Namespace) -> dict[str, Any]:
    """输出元数据 {version, command, seed, params}；不含进程数，保证结果与进程数无关"""
    return {
        "version": AppConfig.APP_VERSION,
        "command": getattr(args, "command_path", None),
        "seed": getattr(args, "seed", None),
        "params": BaseCommand.get_params(args),
    }
