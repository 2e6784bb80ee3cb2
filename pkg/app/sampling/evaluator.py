"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: evaluator.py
@DateTime: 2025-07-09
@Docs: 比较各采样方法得到的子网络 ρ̂ 与原图 ρ̂
"""

from dataclasses import dataclass
from typing import Any

import numpy as np
import polars as pl

from app.core.exceptions import DegenerateGraph
from app.graph.graph import Graph
from app.sampling.sample_spec import SampleSpec
from app.sampling.samplers import sample
from app.stats.subgraph_stats import graph_stats
from app.utils.logger import log_function_calls, logger
from app.utils.parallel import derive_seed, parallel_map
from app.utils.validators import ParamValidator
from config.app_config import AppConfig

REPLICATE_SCHEMA = {
    "spec": pl.Int64,
    "method": pl.Utf8,
    "fraction": pl.Float64,
    "rep": pl.Int64,
    "nodes": pl.Int64,
    "edges": pl.Int64,
    "rho_hat": pl.Float64,
    "cc_hat": pl.Float64,
}

SUMMARY_SCHEMA = {
    "method": pl.Utf8,
    "fraction": pl.Float64,
    "reps": pl.Int64,
    "defined": pl.Int64,
    "undefined": pl.Int64,
    "mean_rho_hat": pl.Float64,
    "sd_rho_hat": pl.Float64,
    "original_rho_hat": pl.Float64,
    "abs_bias": pl.Float64,
}


@dataclass(frozen=True)
class SampleReport:
    """采样评估报告

    Attributes:
        original_rho_hat: 原图的 ρ̂
        summary: 每个 (方法, 比例) 一行: reps, defined, undefined, mean/sd, |bias|
        replicates: 每次采样一行的长表
    """

    original_rho_hat: float | None
    summary: pl.DataFrame
    replicates: pl.DataFrame

    def to_dict(self) -> dict[str, Any]:
        return {"original_rho_hat": self.original_rho_hat, "methods": self.summary.to_dicts()}


def _evaluate_replicate(g: Graph, task: tuple[SampleSpec, int, int, int]) -> dict[str, Any]:
    spec, spec_idx, rep, master_seed = task
    sub = sample(g, spec.with_seed(derive_seed(master_seed, spec_idx, rep)))
    rho_hat = cc_hat = None
    try:
        stats = graph_stats(sub)
        rho_hat, cc_hat = stats.rho_hat, stats.cc_hat
    except DegenerateGraph:
        pass
    return {
        "spec": spec_idx,
        "method": spec.method,
        "fraction": float(spec.fraction),
        "rep": rep,
        "nodes": sub.n,
        "edges": sub.m,
        "rho_hat": rho_hat,
        "cc_hat": cc_hat,
    }


def _summarize(spec: SampleSpec, rows: list[dict[str, Any]], original: float | None) -> dict[str, Any]:
    values = np.array([row["rho_hat"] for row in rows if row["rho_hat"] is not None], dtype=float)
    mean = float(values.mean()) if values.size else None
    return {
        "method": spec.method,
        "fraction": float(spec.fraction),
        "reps": len(rows),
        "defined": int(values.size),
        "undefined": len(rows) - int(values.size),
        "mean_rho_hat": mean,
        "sd_rho_hat": float(values.std(ddof=1)) if values.size > 1 else None,
        "original_rho_hat": original,
        "abs_bias": abs(mean - original) if mean is not None and original is not None else None,
    }


@log_function_calls()
def evaluate_samplers(
    g: Graph,
    specs: list[SampleSpec],
    reps: int,
    master_seed: int = AppConfig.DEFAULT_SEED,
    workers: int = 1,
) -> SampleReport:
    """对每个采样规格重复采样 reps 次，统计子网络 ρ̂ 的均值、标准差与偏差

    第 i 个规格的第 rep 次采样使用由 (master_seed, i, rep) 派生的种子，规格自带的 seed 被忽略；
    各规格可取不同比例，用于比例网格实验。均值与标准差只在 ρ̂ 有定义的子网络上计算。

    Args:
        g: 原图
        specs: 采样规格列表
        reps: 每个规格的重复次数
        master_seed: 主种子
        workers: 进程数

    Returns:
        采样评估报告
    """
    reps = ParamValidator.integer_at_least(reps, 1, "reps")
    for spec in specs:
        spec.target_size(g.n)
    original = graph_stats(g, workers=workers).rho_hat

    tasks = [(spec, spec_idx, rep, master_seed) for spec_idx, spec in enumerate(specs) for rep in range(reps)]
    rows = parallel_map(_evaluate_replicate, tasks, workers, shared=g)

    summary_rows = [
        _summarize(spec, [row for row in rows if row["spec"] == spec_idx], original) for spec_idx, spec in enumerate(specs)
    ]
    for row in summary_rows:
        if row["undefined"]:
            logger.warning(f"采样评估: {row['method']} f={row['fraction']} 有 {row['undefined']} 个子网络 ρ̂ 无定义")
    logger.info(f"采样评估完成 | 规格数: {len(specs)} | 重复: {reps} | 原图 ρ̂: {original}")
    return SampleReport(
        original_rho_hat=original,
        summary=pl.DataFrame(summary_rows, schema=SUMMARY_SCHEMA),
        replicates=pl.DataFrame(rows, schema=REPLICATE_SCHEMA),
    )


def fraction_grid(methods: list[str], fractions: list[float], **params: Any) -> list[SampleSpec]:
    """方法 × 比例的规格网格"""
    return [SampleSpec(method=method, fraction=fraction, **params) for fraction in fractions for method in methods]
