"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: simulate_command.py
@DateTime: 2025-07-13
@Docs: simulate 子命令: 聚类识别模拟与置信区间覆盖率实验
"""

import argparse

from app.base.base_command import BaseCommand, CommandOutput
from app.commands.common import add_alpha_argument, add_dcbm_arguments, dcbm_params_from_args
from app.core.service_manager import ServiceManager
from app.inference.simulation import clustering_simulation, coverage_experiment


class SimulateCommand(BaseCommand):
    """可复现的 Monte Carlo 实验"""

    name = "simulate"

    def get_description(self) -> str:
        return "聚类识别模拟（协议 1-3）与 ρ̂ 置信区间覆盖率"

    def configure(self, subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
        parser = subparsers.add_parser(self.name, help=self.get_description())
        actions = parser.add_subparsers(dest="experiment", required=True)

        p = actions.add_parser("clustering", help="比较 ρ̂ 与 ĉc 区分两组模型的能力", parents=[common])
        p.add_argument("--protocol", type=int, choices=(1, 2, 3), required=True, help="模拟协议")
        p.add_argument("--reps", type=int, default=200, help="每组重复次数")
        p.add_argument("--n", type=int, default=200, help="节点数")
        p.add_argument("--k", type=int, default=3, help="块数")
        p.add_argument("--replicates", default=None, help="逐次重复结果 CSV 输出路径")
        p.set_defaults(run=self.execute, handler=self._run_clustering, command_path="simulate clustering")

        p = actions.add_parser("coverage", help="置信区间覆盖率与正态性检验", parents=[common])
        add_dcbm_arguments(p)
        p.add_argument("--reps", type=int, default=500, help="重复次数")
        p.add_argument("--include-values", action="store_true", help="输出每次重复的标准化统计量")
        add_alpha_argument(p)
        p.set_defaults(run=self.execute, handler=self._run_coverage, command_path="simulate coverage")

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        pass

    def execute(self, args: argparse.Namespace) -> CommandOutput:
        return args.handler(args)

    def _run_clustering(self, args: argparse.Namespace) -> CommandOutput:
        result = clustering_simulation(
            args.protocol, args.reps, master_seed=args.seed, workers=args.workers, n=args.n, k=args.k
        )
        if args.replicates:
            ServiceManager.export_handler().write_table(result.replicates, args.replicates)
        return CommandOutput(payload=result.summary, table=result.replicates)

    def _run_coverage(self, args: argparse.Namespace) -> CommandOutput:
        params = dcbm_params_from_args(args)
        result = coverage_experiment(params, args.reps, alpha=args.alpha, master_seed=args.seed, workers=args.workers)
        payload = result.to_dict(include_values=args.include_values)
        payload["model"] = params.describe()
        return CommandOutput(payload=payload)
