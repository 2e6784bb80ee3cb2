"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: series_command.py
@DateTime: 2025-07-13
@Docs: series 子命令: 快照序列逐个计算统计量
"""

import argparse

from app.base.base_command import BaseCommand, CommandOutput
from app.core.service_manager import ServiceManager
from app.dynamics.series import series_stats


class SeriesCommand(BaseCommand):
    """读取快照清单，输出每个快照一行"""

    name = "series"

    def get_description(self) -> str:
        return "快照序列的 ρ̂、ĉc 与真实 in-out-ratio"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("manifest", help="快照清单 CSV（tag, edges[, labels]）")

    def execute(self, args: argparse.Namespace) -> CommandOutput:
        series = ServiceManager.file_handler().read_manifest(args.manifest)
        table = series_stats(series, workers=args.workers)
        return CommandOutput(payload={"snapshots": table}, table=table)
