"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: theory_command.py
@DateTime: 2025-07-13
@Docs: theory 子命令: 闭式总体量、逆映射与模型分类
"""

import argparse
from dataclasses import asdict

from app.base.base_command import BaseCommand, CommandOutput
from app.theory.closed_form import (
    classify_model,
    dcbm_population,
    lcd_rho_asymptote,
    m_of_rho,
    r_of_rho,
    rho_of_r,
)


class TheoryCommand(BaseCommand):
    """理论计算，不涉及随机性"""

    name = "theory"

    def get_description(self) -> str:
        return "ρ(r, K)、r(ρ, K)、LCD 渐近值与模型分类"

    def configure(self, subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
        parser = subparsers.add_parser(self.name, help=self.get_description())
        actions = parser.add_subparsers(dest="action", required=True)

        p = actions.add_parser("rho-of-r", help="DCBM 下的 ρ(r, K)", parents=[common])
        p.add_argument("--r", type=float, required=True)
        p.add_argument("--k", type=int, required=True)
        p.set_defaults(run=self.execute, handler=lambda a: {"rho": rho_of_r(a.r, a.k)}, command_path="theory rho-of-r")

        p = actions.add_parser("r-of-rho", help="由 ρ 反推 in-out-ratio", parents=[common])
        p.add_argument("--rho", type=float, required=True)
        p.add_argument("--k", type=int, required=True)
        p.set_defaults(run=self.execute, handler=lambda a: {"r": r_of_rho(a.rho, a.k)}, command_path="theory r-of-rho")

        p = actions.add_parser("lcd-rho", help="LCD 模型的 ρ 渐近值", parents=[common])
        p.add_argument("--m", type=int, required=True)
        p.set_defaults(run=self.execute, handler=lambda a: {"rho": lcd_rho_asymptote(a.m)}, command_path="theory lcd-rho")

        p = actions.add_parser("lcd-m", help="由 ρ 推断 LCD 的 m", parents=[common])
        p.add_argument("--rho", type=float, required=True)
        p.set_defaults(run=self.execute, handler=lambda a: {"m": m_of_rho(a.rho)}, command_path="theory lcd-m")

        p = actions.add_parser("classify", help="按 ρ 区间识别生成模型", parents=[common])
        p.add_argument("--rho", type=float, required=True)
        p.add_argument("--er-band", type=float, default=None, help="ER 区间半宽")
        p.set_defaults(run=self.execute, handler=lambda a: classify_model(a.rho, a.er_band).to_dict(), command_path="theory classify")

        p = actions.add_parser("population", help="DCBM 的总体量 E、V、T、ρ、cc", parents=[common])
        p.add_argument("--p", type=float, required=True)
        p.add_argument("--q", type=float, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--mean-theta", type=float, default=1.0)
        p.set_defaults(
            run=self.execute,
            handler=lambda a: asdict(dcbm_population(a.p, a.q, a.k, a.mean_theta)),
            command_path="theory population",
        )

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        pass

    def execute(self, args: argparse.Namespace) -> CommandOutput:
        return CommandOutput(payload=args.handler(args))
