"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: series.py
@DateTime: 2025-07-10
@Docs: 快照序列: 逐个快照的 ρ̂、ĉc 与按标签计算的真实 in-out-ratio
"""

from collections.abc import Hashable, Iterator
from dataclasses import dataclass, field
from typing import Any

import numpy as np
import polars as pl

from app.core.exceptions import DegenerateGraph, GraphAnalyticsError
from app.graph.graph import Graph, NodeLabeling
from app.stats.subgraph_stats import graph_stats
from app.utils.logger import log_function_calls, logger
from app.utils.parallel import parallel_map

SERIES_SCHEMA = {
    "tag": pl.Utf8,
    "n": pl.Int64,
    "edges": pl.Int64,
    "rho_hat": pl.Float64,
    "cc_hat": pl.Float64,
    "cc_ratio": pl.Float64,
    "true_in_out_ratio": pl.Float64,
}


@dataclass(frozen=True)
class Snapshot:
    """一个快照: 标签（不透明字符串）、图与可选的节点标签"""

    tag: str
    graph: Graph
    labels: NodeLabeling | None = None

    def __post_init__(self) -> None:
        if self.labels is not None:
            self.labels.check_covers(self.graph)


@dataclass(frozen=True)
class SnapshotSeries:
    """按输入顺序排列的快照序列，标签唯一"""

    snapshots: tuple[Snapshot, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        tags = [s.tag for s in self.snapshots]
        duplicates = sorted({t for t in tags if tags.count(t) > 1})
        if duplicates:
            raise GraphAnalyticsError(f"snapshot tags must be unique, duplicated: {duplicates}")

    @classmethod
    def from_items(cls, items: list[tuple[Hashable, Graph, NodeLabeling | None]]) -> "SnapshotSeries":
        return cls(snapshots=tuple(Snapshot(str(tag), graph, labels) for tag, graph, labels in items))

    @property
    def tags(self) -> list[str]:
        return [s.tag for s in self.snapshots]

    def __len__(self) -> int:
        return len(self.snapshots)

    def __iter__(self) -> Iterator[Snapshot]:
        return iter(self.snapshots)


def true_in_out_ratio(g: Graph, labels: NodeLabeling) -> float | None:
    """同标签边数 / 异标签边数，分母为 0 时无定义（None）

    Raises:
        LabelMismatch: 标签长度与节点数不一致
    """
    labels.check_covers(g)
    edges = g.edges
    same = labels.labels[edges[:, 0]] == labels.labels[edges[:, 1]]
    within = int(np.count_nonzero(same))
    between = int(same.size - within)
    if between == 0:
        logger.debug(f"没有异标签边，in-out-ratio 无定义 | 同标签边: {within}")
        return None
    return within / between


def _snapshot_row(snapshot: Snapshot) -> dict[str, Any]:
    g = snapshot.graph
    rho_hat = cc_hat = cc_ratio = None
    try:
        stats = graph_stats(g)
        rho_hat, cc_hat, cc_ratio = stats.rho_hat, stats.cc_hat, stats.cc_ratio
    except DegenerateGraph:
        logger.debug(f"快照节点数不足 3，统计量无定义 | 标签: {snapshot.tag}")
    ratio = true_in_out_ratio(g, snapshot.labels) if snapshot.labels is not None else None
    return {
        "tag": snapshot.tag,
        "n": g.n,
        "edges": g.m,
        "rho_hat": rho_hat,
        "cc_hat": cc_hat,
        "cc_ratio": cc_ratio,
        "true_in_out_ratio": ratio,
    }


@log_function_calls()
def series_stats(series: SnapshotSeries, workers: int = 1) -> pl.DataFrame:
    """逐快照统计

    每个快照一行（tag, n, edges, rho_hat, cc_hat, true_in_out_ratio），顺序与输入一致；
    无定义的量为 null，只有带标签的快照才计算 in-out-ratio。
    """
    rows = parallel_map(_snapshot_row, list(series.snapshots), workers)
    logger.info(f"快照序列统计完成 | 快照数: {len(rows)}")
    return pl.DataFrame(rows, schema=SERIES_SCHEMA)
