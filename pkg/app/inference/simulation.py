"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: simulation.py
@DateTime: 2025-07-07
@Docs: 可复现的 Monte Carlo 实验：聚类识别模拟与置信区间覆盖率
"""

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np
import polars as pl
from scipy import stats as sps

from app.core.exceptions import DegenerateStatistic
from app.generators.block_models import DcbmParams, dcbm_from_degree, gen_dcbm
from app.generators.theta import ThetaLaw
from app.inference.normal import inv_norm_cdf
from app.stats.ranking import rank_auc
from app.stats.subgraph_stats import graph_stats
from app.theory.closed_form import rho_of_r
from app.utils.logger import log_function_calls, logger
from app.utils.parallel import derive_rng, derive_seed, parallel_map
from app.utils.validators import ParamValidator
from config.app_config import AppConfig
from config.model_config import ModelConfig


@dataclass(frozen=True)
class GroupDesign:
    """一组模拟网络的设计

    Attributes:
        name: 组名
        r: in-out-ratio
        lam_range: 平均度 λ 的均匀分布区间（上下界相等时为固定值）
        theta: θ 分布
    """

    name: str
    r: float
    lam_range: tuple[float, float]
    theta: ThetaLaw


@dataclass(frozen=True)
class SimulationResult:
    """聚类识别模拟结果：逐次重复的长表与汇总"""

    protocol: int
    replicates: pl.DataFrame
    summary: dict[str, Any]


@dataclass(frozen=True)
class CoverageResult:
    """置信区间覆盖率实验结果"""

    rho_pop: float
    reps: int
    defined: int
    coverage: float
    ks_statistic: float
    ks_pvalue: float
    alpha: float
    standardized: list[float] = field(default_factory=list)

    def to_dict(self, include_values: bool = False) -> dict[str, Any]:
        data = {
            "rho_pop": self.rho_pop,
            "reps": self.reps,
            "defined": self.defined,
            "coverage": self.coverage,
            "ks_statistic": self.ks_statistic,
            "ks_pvalue": self.ks_pvalue,
            "alpha": self.alpha,
        }
        if include_values:
            data["standardized"] = list(self.standardized)
        return data


def protocol_design(protocol: int) -> tuple[GroupDesign, GroupDesign]:
    """三个聚类识别协议的 (A 组, B 组) 设计，两组都取 K=3、均匀 π

    - 1: Θ≡1，λ=15，A 组 r=20/3，B 组 r=10
    - 2: 两点 Θ（0.2 概率 0.8，1 概率 0.2，按二阶矩归一），A 组 λ~U(25,30)、B 组 λ~U(10,15)
    - 3: 幂律 Θ，A 组 α=4.2，B 组 α=6，λ=15
    """
    if protocol == 1:
        theta = ThetaLaw.constant()
        return (
            GroupDesign("A", 20.0 / 3.0, (15.0, 15.0), theta),
            GroupDesign("B", 10.0, (15.0, 15.0), theta),
        )
    if protocol == 2:
        theta = ThetaLaw.two_point((0.2, 1.0), (0.8, 0.2), normalize_second_moment=True)
        return (
            GroupDesign("A", 20.0 / 3.0, (25.0, 30.0), theta),
            GroupDesign("B", 10.0, (10.0, 15.0), theta),
        )
    if protocol == 3:
        return (
            GroupDesign("A", 20.0 / 3.0, (15.0, 15.0), ThetaLaw.power_law(4.2)),
            GroupDesign("B", 10.0, (15.0, 15.0), ThetaLaw.power_law(6.0)),
        )
    raise ValueError(f"unknown clustering protocol {protocol!r}; expected 1, 2 or 3")


def _clustering_replicate(task: tuple[GroupDesign, int, int, int, int, int]) -> dict[str, Any]:
    design, group_idx, rep, n, k, master_seed = task
    rng = derive_rng(master_seed, group_idx, rep)
    lo, hi = design.lam_range
    lam = float(rng.uniform(lo, hi)) if hi > lo else float(lo)
    params = dcbm_from_degree(n, k, design.r, lam, theta=design.theta, seed=derive_seed(master_seed, group_idx, rep, 0))
    sample = gen_dcbm(params)
    stats = graph_stats(sample.graph)
    return {
        "group": design.name,
        "rep": rep,
        "lam": lam,
        "r": design.r,
        "edges": stats.edges,
        "rho_hat": stats.rho_hat,
        "cc_hat": stats.cc_hat,
        "cc_ratio": stats.cc_ratio,
        "clamp_count": sample.clamp_count,
    }


def _group_summary(frame: pl.DataFrame, column: str) -> dict[str, dict[str, float | None]]:
    summary = {}
    for name in sorted(frame["group"].unique().to_list()):
        values = frame.filter(pl.col("group") == name)[column].drop_nulls()
        summary[name] = {
            "mean": float(values.mean()) if values.len() else None,
            "sd": float(values.std()) if values.len() > 1 else None,
        }
    return summary


@log_function_calls()
def clustering_simulation(
    protocol: int,
    reps: int,
    master_seed: int = AppConfig.DEFAULT_SEED,
    workers: int = 1,
    n: int = 200,
    k: int = 3,
) -> SimulationResult:
    """比较 ρ̂ 与 ĉc 区分两组生成模型的能力

    每组生成 reps 个 DCBM 网络，第 rep 个网络的 λ 与种子由 (master_seed, 组号, rep) 派生。
    汇总中的 AUC 方向固定为 ℙ(B 组得分 > A 组得分)，B 组的 in-out-ratio 更大。

    Returns:
        逐次重复长表（group, rep, lam, r, edges, rho_hat, cc_hat, cc_ratio, clamp_count）与汇总
    """
    reps = ParamValidator.integer_at_least(reps, 1, "reps")
    group_a, group_b = protocol_design(protocol)
    tasks = [
        (design, group_idx, rep, n, k, master_seed)
        for group_idx, design in enumerate((group_a, group_b))
        for rep in range(reps)
    ]
    rows = parallel_map(_clustering_replicate, tasks, workers)
    frame = pl.DataFrame(rows)

    def _scores(name: str, column: str) -> np.ndarray:
        return frame.filter(pl.col("group") == name)[column].drop_nulls().to_numpy()

    summary: dict[str, Any] = {
        "protocol": protocol,
        "reps": reps,
        "n": n,
        "k": k,
        "rho_pop": {d.name: rho_of_r(d.r, k) for d in (group_a, group_b)},
        "rho_hat": _group_summary(frame, "rho_hat"),
        "cc_hat": _group_summary(frame, "cc_hat"),
        "undefined": int(frame["rho_hat"].null_count()),
        "clamped_replicates": int((frame["clamp_count"] > 0).sum()),
        "auc_rho_hat": rank_auc(_scores("B", "rho_hat"), _scores("A", "rho_hat")),
        "auc_cc_hat": rank_auc(_scores("B", "cc_hat"), _scores("A", "cc_hat")),
    }
    logger.info(
        f"聚类识别模拟完成 | 协议: {protocol} | 重复: {reps} | AUC(ρ̂): {summary['auc_rho_hat']:.3f} | AUC(ĉc): {summary['auc_cc_hat']:.3f}"
    )
    return SimulationResult(protocol=protocol, replicates=frame, summary=summary)


def _coverage_replicate(task: tuple[DcbmParams, int, int, float, float]) -> tuple[float, bool] | None:
    params, master_seed, rep, rho_pop, z = task
    stats = graph_stats(gen_dcbm(params.with_seed(derive_seed(master_seed, rep))).graph)
    if stats.rho_hat is None or stats.triangles == 0:
        return None
    root = math.sqrt(stats.triangles)
    standardized = root * (stats.rho_hat - rho_pop) / rho_pop
    half = z * stats.rho_hat / root
    covered = max(0.0, stats.rho_hat - half) <= rho_pop <= stats.rho_hat + half
    return standardized, covered


@log_function_calls()
def coverage_experiment(
    params: DcbmParams,
    reps: int,
    alpha: float = ModelConfig.DEFAULT_ALPHA,
    master_seed: int = AppConfig.DEFAULT_SEED,
    workers: int = 1,
) -> CoverageResult:
    """置信区间覆盖率与标准化统计量的正态性

    总体值取 ρ(r, K)。标准化统计量 √(C(N,3)T̂)(ρ̂−ρ)/ρ = √Δ(ρ̂−ρ)/ρ 与 N(0,1) 做 KS 检验。

    Raises:
        DegenerateStatistic: 所有重复都没有三角形
    """
    reps = ParamValidator.integer_at_least(reps, 1, "reps")
    alpha = ParamValidator.alpha(alpha)
    rho_pop = rho_of_r(params.r, params.k)
    z = inv_norm_cdf(1.0 - alpha / 2.0)

    tasks = [(params, master_seed, rep, rho_pop, z) for rep in range(reps)]
    outcomes = [row for row in parallel_map(_coverage_replicate, tasks, workers) if row is not None]
    if not outcomes:
        raise DegenerateStatistic("no replicate produced a triangle; coverage is undefined")
    if len(outcomes) < reps:
        logger.warning(f"覆盖率实验中有 {reps - len(outcomes)} 次重复没有三角形，已跳过")

    standardized = [value for value, _ in outcomes]
    coverage = sum(1 for _, covered in outcomes if covered) / len(outcomes)
    ks = sps.kstest(standardized, "norm")
    logger.info(f"覆盖率实验完成 | ρ: {rho_pop:.5f} | 覆盖率: {coverage:.3f} | KS p 值: {ks.pvalue:.4f}")
    return CoverageResult(
        rho_pop=rho_pop,
        reps=reps,
        defined=len(outcomes),
        coverage=coverage,
        ks_statistic=float(ks.statistic),
        ks_pvalue=float(ks.pvalue),
        alpha=alpha,
        standardized=standardized,
    )
