"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: ego_scan.py
@DateTime: 2025-07-11
@Docs: 逐节点自我网络统计与生成模型分类
"""

from dataclasses import dataclass
from typing import Any

import numpy as np
import polars as pl

from app.core.exceptions import DegenerateGraph, DegenerateStatistic
from app.graph.graph import Graph, NodeLabeling, ego_network
from app.stats.ranking import rank_auc
from app.stats.subgraph_stats import graph_stats
from app.theory.closed_form import classify_model
from app.utils.logger import log_function_calls, logger
from app.utils.parallel import parallel_map
from config.model_config import ModelConfig

EGO_SCHEMA = {
    "node": pl.Int64,
    "degree": pl.Int64,
    "rho_hat": pl.Float64,
    "cc_hat": pl.Float64,
    "cc_ratio": pl.Float64,
    "model_class": pl.Utf8,
    "label": pl.Int64,
}

_SCAN_CHUNK = 256


@dataclass(frozen=True)
class EgoScanReport:
    """自我网络扫描结果

    Attributes:
        table: 每个度数大于阈值的节点一行
        undefined: 没有楔形（ρ̂ 无定义）的自我网络个数
        auc_rho_hat: 二值标签下 ρ̂ 的秩 AUC，ℙ(标签 1 的得分 > 标签 0 的得分)
        auc_cc_hat: 同上，针对 ĉc
    """

    min_degree: int
    table: pl.DataFrame
    undefined: int
    auc_rho_hat: float | None = None
    auc_cc_hat: float | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "min_degree": self.min_degree,
            "scanned": self.table.height,
            "undefined": self.undefined,
            "auc_rho_hat": self.auc_rho_hat,
            "auc_cc_hat": self.auc_cc_hat,
            "class_counts": dict(sorted(self.table.group_by("model_class").len().iter_rows())),
        }


def ego_row(g: Graph, center: int) -> dict[str, Any]:
    """单个节点自我网络的统计与分类"""
    rho_hat = cc_hat = cc_ratio = None
    try:
        stats = graph_stats(ego_network(g, center))
        rho_hat, cc_hat, cc_ratio = stats.rho_hat, stats.cc_hat, stats.cc_ratio
    except DegenerateGraph:
        pass
    return {
        "node": int(center),
        "degree": int(g.degrees[center]),
        "rho_hat": rho_hat,
        "cc_hat": cc_hat,
        "cc_ratio": cc_ratio,
        "model_class": classify_model(rho_hat).kind.value,
    }


def _scan_chunk(g: Graph, centers: np.ndarray) -> list[dict[str, Any]]:
    return [ego_row(g, int(v)) for v in centers]


def _safe_auc(frame: pl.DataFrame, column: str) -> float | None:
    defined = frame.filter(pl.col(column).is_not_null())
    try:
        return rank_auc(
            defined.filter(pl.col("label") == 1)[column].to_numpy(),
            defined.filter(pl.col("label") == 0)[column].to_numpy(),
        )
    except DegenerateStatistic:
        return None


@log_function_calls()
def ego_scan(
    g: Graph,
    min_degree: int = ModelConfig.EGO_MIN_DEGREE,
    labels: NodeLabeling | None = None,
    workers: int = 1,
) -> EgoScanReport:
    """对度数大于 min_degree 的每个节点计算其自我网络的 ρ̂、ĉc 并按 ρ̂ 分类

    没有楔形的自我网络统计量为 null，单独计数；给出二值标签时附带 ρ̂ 与 ĉc 的秩 AUC。

    Raises:
        LabelMismatch: 标签长度与节点数不一致
    """
    if labels is not None:
        labels.check_covers(g)

    centers = np.flatnonzero(g.degrees > min_degree)
    tasks = [centers[i : i + _SCAN_CHUNK] for i in range(0, centers.size, _SCAN_CHUNK)]
    rows = [row for chunk in parallel_map(_scan_chunk, tasks, workers, shared=g) for row in chunk]
    for row in rows:
        row["label"] = int(labels.labels[row["node"]]) if labels is not None else None
    table = pl.DataFrame(rows, schema=EGO_SCHEMA)

    undefined = int(table["rho_hat"].null_count())
    if undefined:
        logger.info(f"自我网络中有 {undefined} 个没有楔形，已单独计数")

    auc_rho = auc_cc = None
    if labels is not None and labels.k == 2:
        auc_rho = _safe_auc(table, "rho_hat")
        auc_cc = _safe_auc(table, "cc_hat")
    elif labels is not None:
        logger.warning(f"标签不是二值（k={labels.k}），跳过 AUC 计算")

    logger.info(f"自我网络扫描完成 | 扫描节点: {table.height} | 阈值: {min_degree}")
    return EgoScanReport(
        min_degree=min_degree, table=table, undefined=undefined, auc_rho_hat=auc_rho, auc_cc_hat=auc_cc
    )
