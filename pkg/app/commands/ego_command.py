"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: ego_command.py
@DateTime: 2025-07-13
@Docs: ego 子命令: 单个节点或全图的自我网络分类
"""

import argparse

from app.base.base_command import BaseCommand, CommandOutput
from app.commands.common import add_input_argument, add_relabel_argument, read_input
from app.core.exceptions import InvalidNodeError
from app.core.service_manager import ServiceManager
from app.stats.ego_scan import ego_row, ego_scan
from config.model_config import ModelConfig


class EgoCommand(BaseCommand):
    """自我网络: --center 给出单个节点，--scan 扫描所有度数大于阈值的节点"""

    name = "ego"

    def get_description(self) -> str:
        return "自我网络的 ρ̂ 与生成模型分类"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_input_argument(parser)
        add_relabel_argument(parser)
        mode = parser.add_mutually_exclusive_group(required=True)
        mode.add_argument("--center", default=None, help="中心节点 id")
        mode.add_argument("--scan", action="store_true", help="扫描所有度数大于阈值的节点")
        parser.add_argument("--min-degree", type=int, default=ModelConfig.EGO_MIN_DEGREE, help="扫描的度数阈值")
        parser.add_argument("--labels", default=None, help="节点标签文件（二值标签时给出 AUC）")

    def execute(self, args: argparse.Namespace) -> CommandOutput:
        data = read_input(args.input, args.relabel)
        if not args.scan:
            index = data.node_index()
            if index is not None:
                if args.center not in index:
                    raise InvalidNodeError(f"node {args.center!r} does not appear in the graph")
                center = index[args.center]
            else:
                center = int(args.center)
                data.graph.check_node(center)
            row = ego_row(data.graph, center)
            row["node_id"] = args.center
            return CommandOutput(payload=row)

        labels = ServiceManager.file_handler().read_labels(args.labels, data) if args.labels else None
        report = ego_scan(data.graph, min_degree=args.min_degree, labels=labels, workers=args.workers)
        return CommandOutput(payload=report.to_dict(), table=report.table)
