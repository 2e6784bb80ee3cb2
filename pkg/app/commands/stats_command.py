"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: stats_command.py
@DateTime: 2025-07-13
@Docs: stats 子命令: 单个图的 ρ̂、ĉc 等统计量
"""

import argparse

from app.base.base_command import BaseCommand, CommandOutput
from app.commands.common import add_input_argument, add_relabel_argument, read_input
from app.core.error_handler import EXIT_DEGENERATE, EXIT_OK
from app.stats.subgraph_stats import graph_stats
from app.theory.closed_form import classify_model
from app.utils.logger import logger


class StatsCommand(BaseCommand):
    """计算边列表的子图计数与归一化聚类系数"""

    name = "stats"

    def get_description(self) -> str:
        return "计算图的 Ê、V̂、T̂、ρ̂、ĉc 与模型分类"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_input_argument(parser)
        add_relabel_argument(parser)
        parser.add_argument("--method", choices=("hash", "merge"), default=None, help="三角形计数的求交方式")

    def execute(self, args: argparse.Namespace) -> CommandOutput:
        data = read_input(args.input, args.relabel)
        stats = graph_stats(data.graph, workers=args.workers, method=args.method)
        payload = stats.to_dict()
        payload["model_class"] = classify_model(stats.rho_hat).kind.value
        if not stats.rho_defined:
            logger.warning(f"图没有楔形，ρ̂ 无定义: {args.input}")
            return CommandOutput(payload=payload, exit_code=EXIT_DEGENERATE)
        return CommandOutput(payload=payload, exit_code=EXIT_OK)
