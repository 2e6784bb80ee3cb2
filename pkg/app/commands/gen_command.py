"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: gen_command.py
@DateTime: 2025-07-13
@Docs: gen 子命令: 按 ER / DCBM / LCD 模型生成边列表
"""

import argparse
import json

from app.base.base_command import BaseCommand, CommandOutput, build_metadata
from app.commands.common import add_dcbm_arguments, dcbm_params_from_args
from app.core.service_manager import ServiceManager
from app.generators.block_models import ErParams, gen_dcbm, gen_er
from app.generators.lcd import LcdParams, gen_lcd
from app.graph.graph import Graph
from app.handlers.file_handler import FileHandler
from app.utils.logger import logger
from config.app_config import AppConfig
from config.model_config import ModelConfig


class GenCommand(BaseCommand):
    """随机图生成

    边列表写到 --output（缺省为标准输出），注释头中记录版本、种子与参数；
    --sidecar 另写一份 JSON 说明（参数、规模、截断次数），--labels-out 写出 DCBM 的块标签。
    """

    name = "gen"

    def get_description(self) -> str:
        return "生成 ER / DCBM / LCD 随机图"

    def configure(self, subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
        parser = subparsers.add_parser(self.name, help=self.get_description())
        models = parser.add_subparsers(dest="model", required=True)

        er = models.add_parser("er", help="Erdős–Rényi G(n, p)", parents=[common])
        er.add_argument("--n", type=int, required=True, help="节点数")
        er.add_argument("--p", type=float, required=True, help="连边概率")
        self.add_arguments(er)
        er.set_defaults(run=self.execute, handler=self._run_er, command_path="gen er")

        dcbm = models.add_parser("dcbm", help="度修正块模型", parents=[common])
        add_dcbm_arguments(dcbm)
        dcbm.add_argument("--labels-out", default=None, help="块标签输出路径")
        self.add_arguments(dcbm)
        dcbm.set_defaults(run=self.execute, handler=self._run_dcbm, command_path="gen dcbm")

        lcd = models.add_parser("lcd", help="LCD 偏好连接模型", parents=[common])
        lcd.add_argument("--n", type=int, required=True, help="节点数")
        lcd.add_argument("--m", type=int, required=True, help="每步新增边数")
        self.add_arguments(lcd)
        lcd.set_defaults(run=self.execute, handler=self._run_lcd, command_path="gen lcd")

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--sidecar", default=None, help="JSON 说明文件路径")

    def execute(self, args: argparse.Namespace) -> CommandOutput:
        return args.handler(args)

    def _finish(self, args: argparse.Namespace, graph: Graph, details: dict) -> CommandOutput:
        metadata = build_metadata(args)
        header = [
            f"{AppConfig.APP_NAME} {AppConfig.APP_VERSION} {metadata['command']}",
            f"seed={args.seed}",
            f"params={json.dumps(metadata['params'], sort_keys=True, default=str)}",
        ]
        payload = {"n": graph.n, "edges": graph.m, "average_degree": graph.average_degree, **details}
        if args.sidecar:
            ServiceManager.export_handler().write(payload, None, metadata, fmt="json", output=args.sidecar)
        logger.info(f"图生成完成 | 模型: {metadata['command']} | 节点: {graph.n} | 边: {graph.m} | 种子: {args.seed}")
        return CommandOutput(payload=payload, text=FileHandler.format_edge_list(graph, header))

    @staticmethod
    def _check_memory(n: int, workers: int) -> None:
        """生成前记录内存情况，按每个进程同时持有一个行块估算"""
        resources = ServiceManager.resource_manager()
        rows = min(ModelConfig.ROW_BLOCK_SIZE, n)
        required_mb = resources.estimate_pair_block_mb(rows, n) * max(workers, 1)
        info = resources.get_memory_info()
        logger.info(f"生成前内存检查 | 预计: {required_mb:.1f} MB | 可用: {info['available_mb']:.1f} MB")
        resources.check_memory_available(required_mb)

    def _run_er(self, args: argparse.Namespace) -> CommandOutput:
        params = ErParams(n=args.n, p=args.p, seed=args.seed)
        self._check_memory(params.n, args.workers)
        graph = gen_er(params, workers=args.workers)
        return self._finish(args, graph, {"model": {"n": params.n, "p": params.p, "seed": params.seed}})

    def _run_dcbm(self, args: argparse.Namespace) -> CommandOutput:
        params = dcbm_params_from_args(args)
        self._check_memory(params.n, args.workers)
        sample = gen_dcbm(params, workers=args.workers)
        if args.labels_out:
            ServiceManager.file_handler().write_text(args.labels_out, FileHandler.format_labels(sample.labels))
        return self._finish(args, sample.graph, {"model": params.describe(), "clamp_count": sample.clamp_count})

    def _run_lcd(self, args: argparse.Namespace) -> CommandOutput:
        params = LcdParams(n=args.n, m=args.m, seed=args.seed)
        sample = gen_lcd(params)
        details = {
            "model": {"n": params.n, "m": params.m, "seed": params.seed},
            "multigraph_edges": sample.draft.edge_count,
            "self_loops": sample.draft.self_loop_count,
        }
        return self._finish(args, sample.graph, details)
