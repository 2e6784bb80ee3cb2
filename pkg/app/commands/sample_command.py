"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: sample_command.py
@DateTime: 2025-07-13
@Docs: sample 子命令: 比较各采样方法的子网络 ρ̂
"""

import argparse

from app.base.base_command import BaseCommand, CommandOutput
from app.commands.common import add_input_argument, add_relabel_argument, read_input
from app.core.service_manager import ServiceManager
from app.sampling.evaluator import evaluate_samplers, fraction_grid
from app.sampling.sample_spec import SAMPLE_METHODS
from config.model_config import ModelConfig


class SampleCommand(BaseCommand):
    """在方法 × 比例网格上重复采样

    汇总表（每个方法与比例一行）按 --format 输出，逐次重复长表可用 --replicates 另存为 CSV。
    """

    name = "sample"

    def get_description(self) -> str:
        return "按多种采样方法与比例评估子网络 ρ̂ 的偏差与波动"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_input_argument(parser)
        add_relabel_argument(parser)
        parser.add_argument("--method", nargs="+", choices=SAMPLE_METHODS, default=list(SAMPLE_METHODS), help="采样方法")
        parser.add_argument("--fraction", type=float, nargs="+", default=[0.2], help="采样比例")
        parser.add_argument("--reps", type=int, default=50, help="每个规格的重复次数")
        parser.add_argument("--flyback-p", type=float, default=ModelConfig.FLYBACK_P)
        parser.add_argument("--jump-p", type=float, default=ModelConfig.JUMP_P)
        parser.add_argument("--forest-p", type=float, default=ModelConfig.FOREST_FIRE_P)
        parser.add_argument("--max-stall-steps", type=int, default=None, help="游走停滞重启步数（缺省 100·s）")
        parser.add_argument("--replicates", default=None, help="逐次重复结果 CSV 输出路径")

    def execute(self, args: argparse.Namespace) -> CommandOutput:
        graph = read_input(args.input, args.relabel).graph
        specs = fraction_grid(
            args.method,
            args.fraction,
            flyback_p=args.flyback_p,
            jump_p=args.jump_p,
            forward_p_f=args.forest_p,
            max_stall_steps=args.max_stall_steps,
            seed=args.seed,
        )
        report = evaluate_samplers(graph, specs, args.reps, master_seed=args.seed, workers=args.workers)
        if args.replicates:
            ServiceManager.export_handler().write_table(report.replicates, args.replicates)
        return CommandOutput(payload=report.to_dict(), table=report.summary)
