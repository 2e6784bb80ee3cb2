"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: __init__.py
@DateTime: 2025-07-03
@Docs: 图表示模块初始化
"""

from .graph import (
    BuildReport,
    Graph,
    InducedSubgraph,
    MultiGraphDraft,
    NodeLabeling,
    build_graph,
    ego_network,
    induced_subgraph,
    simplify,
)

__all__ = [
    "BuildReport",
    "Graph",
    "InducedSubgraph",
    "MultiGraphDraft",
    "NodeLabeling",
    "build_graph",
    "ego_network",
    "induced_subgraph",
    "simplify",
]
