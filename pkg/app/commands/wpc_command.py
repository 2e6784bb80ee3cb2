"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: wpc_command.py
@DateTime: 2025-07-13
@Docs: wpc 子命令: 由联署记录构建 WPC 网络序列
"""

import argparse
from pathlib import Path

import polars as pl

from app.base.base_command import BaseCommand, CommandOutput
from app.core.service_manager import ServiceManager
from app.dynamics.series import series_stats
from app.dynamics.wpc import WpcNetwork, build_wpc_series
from app.graph.graph import NodeLabeling
from app.handlers.file_handler import FileHandler
from app.utils.logger import logger
from config.file_config import FileConfig
from config.model_config import ModelConfig


class WpcCommand(BaseCommand):
    """联署网络

    --out-dir 给出时为每个标签写出 <tag>.edges（节点为稠密编号）、<tag>.nodes（编号 → 原始 id）、
    有党派文件时写 <tag>.labels，并写出可直接交给 series 子命令的 manifest.csv。
    """

    name = "wpc"

    def get_description(self) -> str:
        return "由联署记录构建 WPC 阈值网络并计算统计量"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("input", help="联署记录 CSV（sponsor, bill, cosponsor[, tag]）")
        parser.add_argument("--threshold", type=float, default=ModelConfig.WPC_THRESHOLD, help="WPC 阈值")
        parser.add_argument("--rule", choices=("or", "and"), default="or", help="对称化规则")
        parser.add_argument("--parties", default=None, help="``id party`` 两列文件")
        parser.add_argument("--by-tag", action="store_true", help="按 tag 列拆分为多个快照")
        parser.add_argument("--out-dir", default=None, help="写出边列表、标签与清单的目录")

    def execute(self, args: argparse.Namespace) -> CommandOutput:
        files = ServiceManager.file_handler()
        records_by_tag = files.read_sponsorships(args.input, by_tag=args.by_tag)
        party_of = files.read_label_pairs(args.parties) if args.parties else None
        series, networks = build_wpc_series(records_by_tag, threshold=args.threshold, rule=args.rule, party_of=party_of)
        table = series_stats(series, workers=args.workers)

        if args.out_dir:
            labels = {s.tag: s.labels for s in series}
            self._write_out(files, Path(args.out_dir), networks, labels)

        return CommandOutput(payload={"snapshots": table}, table=table)

    @staticmethod
    def _write_out(
        files: FileHandler, out_dir: Path, networks: dict[str, WpcNetwork], labels: dict[str, NodeLabeling | None]
    ) -> None:
        tag_col, edges_col, labels_col = FileConfig.MANIFEST_COLUMNS
        rows = []
        for tag, network in networks.items():
            edges_name = f"{tag}{FileConfig.EDGE_LIST_EXTENSION}"
            files.write_text(out_dir / edges_name, FileHandler.format_edge_list(network.graph, [f"wpc tag={tag}"]))
            files.write_text(out_dir / f"{tag}.nodes", "".join(f"{i} {node}\n" for i, node in enumerate(network.node_ids)))
            labels_name = ""
            if labels[tag] is not None:
                labels_name = f"{tag}.labels"
                files.write_text(out_dir / labels_name, FileHandler.format_labels(labels[tag]))
            rows.append({tag_col: tag, edges_col: edges_name, labels_col: labels_name})
        manifest = out_dir / "manifest.csv"
        pl.DataFrame(rows, schema={c: pl.Utf8 for c in FileConfig.MANIFEST_COLUMNS}).write_csv(manifest)
        logger.info(f"WPC 网络已写出: {out_dir} | 快照数: {len(rows)}")
