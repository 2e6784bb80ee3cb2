"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: inference_command.py
@DateTime: 2025-07-13
@Docs: test 子命令: 两样本检验、单图置信区间与功效模拟
"""

import argparse
from dataclasses import replace

import polars as pl

from app.base.base_command import BaseCommand, CommandOutput
from app.commands.common import add_alpha_argument, add_relabel_argument, dcbm_params_from_mapping, read_input, read_json
from app.core.service_manager import ServiceManager
from app.generators.block_models import dcbm_from_degree
from app.inference.testing import power_experiment, rho_confidence_interval, two_sample_test
from app.utils.logger import logger

REPLICATE_SCHEMA = {
    "rep": pl.Int64,
    "rho1_hat": pl.Float64,
    "rho2_hat": pl.Float64,
    "statistic": pl.Float64,
    "threshold": pl.Float64,
    "reject": pl.Boolean,
}

POWER_SCHEMA = {
    "lam": pl.Float64,
    "reps": pl.Int64,
    "rejections": pl.Int64,
    "power": pl.Float64,
}


class HypothesisTestCommand(BaseCommand):
    """基于 ρ̂ 渐近正态性的推断"""

    name = "test"

    def get_description(self) -> str:
        return "两样本 in-out-ratio 检验、ρ̂ 置信区间与功效模拟"

    def configure(self, subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
        parser = subparsers.add_parser(self.name, help=self.get_description())
        actions = parser.add_subparsers(dest="action", required=True)

        p = actions.add_parser("two-sample", help="两个网络的 in-out-ratio 是否相同", parents=[common])
        p.add_argument("first", help="第一个边列表")
        p.add_argument("second", help="第二个边列表")
        p.add_argument("--k", type=float, default=None, help="块数上界（缺省取 2 并告警）")
        add_alpha_argument(p)
        add_relabel_argument(p)
        p.set_defaults(run=self.execute, handler=self._run_two_sample, command_path="test two-sample")

        p = actions.add_parser("interval", help="单个网络 ρ̂ 的置信区间", parents=[common])
        p.add_argument("input", help="边列表文件")
        add_alpha_argument(p)
        add_relabel_argument(p)
        p.set_defaults(run=self.execute, handler=self._run_interval, command_path="test interval")

        p = actions.add_parser("power", help="Monte Carlo 估计拒绝率", parents=[common])
        p.add_argument("--config", required=True, help='JSON: {"graph1": {...}, "graph2": {...}}')
        p.add_argument("--reps", type=int, default=200, help="重复次数")
        p.add_argument("--k", type=float, default=None, help="检验使用的块数上界")
        p.add_argument("--lambda-grid", type=float, nargs="+", default=None, help="依次替换两组的平均度")
        p.add_argument("--replicates", default=None, help="逐次重复结果 CSV 输出路径")
        add_alpha_argument(p)
        p.set_defaults(run=self.execute, handler=self._run_power, command_path="test power")

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        pass

    def execute(self, args: argparse.Namespace) -> CommandOutput:
        return args.handler(args)

    def _run_two_sample(self, args: argparse.Namespace) -> CommandOutput:
        g1 = read_input(args.first, args.relabel).graph
        g2 = read_input(args.second, args.relabel).graph
        result = two_sample_test(g1, g2, k=args.k, alpha=args.alpha, workers=args.workers)
        return CommandOutput(payload=result.to_dict())

    def _run_interval(self, args: argparse.Namespace) -> CommandOutput:
        estimate = rho_confidence_interval(read_input(args.input, args.relabel).graph, alpha=args.alpha, workers=args.workers)
        return CommandOutput(payload=estimate.to_dict())

    def _run_power(self, args: argparse.Namespace) -> CommandOutput:
        config = read_json(args.config)
        try:
            specs = [config["graph1"], config["graph2"]]
        except (KeyError, TypeError) as e:
            raise ValueError("power config must be an object with 'graph1' and 'graph2'") from e

        grid = args.lambda_grid or [None]
        results, rows, replicate_frames = [], [], []
        for lam in grid:
            params = []
            for spec in specs:
                base = dcbm_params_from_mapping(spec, seed=args.seed)
                if lam is not None:
                    if "r" not in spec:
                        raise ValueError("--lambda-grid needs models given by r and lambda")
                    base = replace(dcbm_from_degree(base.n, base.k, float(spec["r"]), lam, theta=base.theta), seed=args.seed)
                params.append(base)
            result = power_experiment(
                (params[0], params[1]), args.reps, alpha=args.alpha, k=args.k, master_seed=args.seed, workers=args.workers
            )
            logger.info(f"功效模拟 | λ: {lam} | 拒绝率: {result.power:.3f}")
            entry = result.to_dict()
            entry["lam"] = lam
            entry["models"] = [p.describe() for p in params]
            results.append(entry)
            rows.append({"lam": lam, "reps": result.reps, "rejections": result.rejections, "power": result.power})
            frame = pl.DataFrame(result.replicates, schema=REPLICATE_SCHEMA)
            replicate_frames.append(frame.with_columns(pl.lit(lam, dtype=pl.Float64).alias("lam")))

        if args.replicates:
            ServiceManager.export_handler().write_table(pl.concat(replicate_frames), args.replicates)
        payload = results[0] if args.lambda_grid is None else {"grid": results}
        return CommandOutput(payload=payload, table=pl.DataFrame(rows, schema=POWER_SCHEMA))
