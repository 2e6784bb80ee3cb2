"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: common.py
@DateTime: 2025-07-13
@Docs: 子命令共用的参数定义与参数对象构造
"""

import argparse
import json
from dataclasses import replace
from pathlib import Path
from typing import Any

from app.core.service_manager import ServiceManager
from app.generators.block_models import DcbmParams, dcbm_from_degree
from app.generators.theta import ThetaLaw
from app.handlers.file_handler import EdgeListData
from config.file_config import FileConfig
from config.model_config import ModelConfig

THETA_CHOICES = ("constant", "two-point", "power-law")


def add_input_argument(parser: argparse.ArgumentParser, name: str = "input", help_text: str = "边列表文件") -> None:
    parser.add_argument(name, help=help_text)


def add_relabel_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--relabel", action="store_true", help="把节点 id 当作符号，按首次出现顺序编号")


def read_input(path: str, relabel: bool = False) -> EdgeListData:
    return ServiceManager.file_handler().read_edge_list(path, id_mode="symbol" if relabel else "auto")


def add_alpha_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--alpha", type=float, default=ModelConfig.DEFAULT_ALPHA, help="显著性水平")


def add_theta_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--theta", choices=THETA_CHOICES, default="constant", help="θ 分布")
    parser.add_argument("--theta-alpha", type=float, default=None, help="幂律 θ 的形状参数（> 2）")
    parser.add_argument(
        "--theta-values", type=float, nargs=2, default=(0.2, 1.0), metavar=("LOW", "HIGH"), help="两点 θ 的取值"
    )
    parser.add_argument(
        "--theta-probs", type=float, nargs=2, default=(0.8, 0.2), metavar=("P_LOW", "P_HIGH"), help="两点 θ 的概率"
    )
    parser.add_argument(
        "--theta-normalize",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="按二阶矩缩放 θ 使 𝔼θ² = 1（缺省: 两点分布按原值，幂律缩放）",
    )


def build_theta(
    kind: str,
    values: tuple[float, float] = (0.2, 1.0),
    probs: tuple[float, float] = (0.8, 0.2),
    alpha: float | None = None,
    normalize: bool | None = None,
) -> ThetaLaw:
    """按名称构造 θ 分布，normalize 为 None 时沿用各分布的缺省缩放"""
    if kind == "constant":
        return ThetaLaw.constant()
    if kind == "two-point":
        return ThetaLaw.two_point(tuple(values), tuple(probs), normalize_second_moment=bool(normalize))
    if kind == "power-law":
        if alpha is None:
            raise ValueError("power-law theta requires a shape alpha")
        if normalize is None:
            return ThetaLaw.power_law(float(alpha))
        return ThetaLaw.power_law(float(alpha), normalize_second_moment=normalize)
    raise ValueError(f"unknown theta kind {kind!r}; expected one of {THETA_CHOICES}")


def theta_from_args(args: argparse.Namespace) -> ThetaLaw:
    return build_theta(
        args.theta,
        values=tuple(args.theta_values),
        probs=tuple(args.theta_probs),
        alpha=args.theta_alpha,
        normalize=args.theta_normalize,
    )


def add_dcbm_arguments(parser: argparse.ArgumentParser) -> None:
    """DCBM 参数: 直接给出 --p/--q，或给出 --r/--lambda 由平均度推导"""
    parser.add_argument("--n", type=int, required=True, help="节点数")
    parser.add_argument("--k", type=int, required=True, help="块数")
    parser.add_argument("--p", type=float, default=None, help="块内基础概率")
    parser.add_argument("--q", type=float, default=None, help="块间基础概率")
    parser.add_argument("--r", type=float, default=None, help="in-out-ratio p/q")
    parser.add_argument("--lambda", dest="lam", type=float, default=None, help="平均度")
    parser.add_argument("--pi", type=float, nargs="+", default=None, help="块比例（缺省为均匀）")
    add_theta_arguments(parser)


def dcbm_params_from_args(args: argparse.Namespace) -> DcbmParams:
    theta = theta_from_args(args)
    pi = tuple(args.pi) if args.pi else None
    if args.p is not None and args.q is not None:
        return DcbmParams(n=args.n, k=args.k, p=args.p, q=args.q, theta=theta, pi=pi, seed=args.seed)
    if args.r is not None and args.lam is not None:
        params = dcbm_from_degree(args.n, args.k, args.r, args.lam, theta=theta, seed=args.seed)
        return params if pi is None else replace(params, pi=pi)
    raise ValueError("DCBM needs either --p and --q, or --r and --lambda")


def dcbm_params_from_mapping(spec: dict[str, Any], seed: int) -> DcbmParams:
    """从 JSON 对象构造 DCBM 参数: {n, k, p, q} 或 {n, k, r, lambda}，可选 theta: {kind, values, probs, alpha, normalize}"""
    theta_spec = spec.get("theta", {"kind": "constant"})
    theta = build_theta(
        theta_spec.get("kind", "constant"),
        values=tuple(theta_spec.get("values", (0.2, 1.0))),
        probs=tuple(theta_spec.get("probs", (0.8, 0.2))),
        alpha=theta_spec.get("alpha"),
        normalize=theta_spec.get("normalize"),
    )

    n, k = int(spec["n"]), int(spec["k"])
    if "p" in spec and "q" in spec:
        return DcbmParams(n=n, k=k, p=float(spec["p"]), q=float(spec["q"]), theta=theta, seed=seed)
    if "r" in spec and "lambda" in spec:
        return dcbm_from_degree(n, k, float(spec["r"]), float(spec["lambda"]), theta=theta, seed=seed)
    raise ValueError("each model needs either p and q, or r and lambda")


def read_json(path: str | Path) -> Any:
    path = ServiceManager.file_handler().check_file(path)
    return json.loads(path.read_text(encoding=FileConfig.ENCODING))
