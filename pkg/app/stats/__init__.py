"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: __init__.py
@DateTime: 2025-07-04
@Docs: 子图统计模块初始化
"""

from .subgraph_stats import (
    GraphStats,
    SubgraphCounts,
    count_subgraphs,
    count_triangles,
    graph_stats,
    rho_matrix_form,
    stats_from_counts,
)

__all__ = [
    "GraphStats",
    "SubgraphCounts",
    "count_subgraphs",
    "count_triangles",
    "graph_stats",
    "rho_matrix_form",
    "stats_from_counts",
]
