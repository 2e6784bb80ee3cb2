"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: graph.py
@DateTime: 2025-07-03
@Docs: 简单无向图的规范表示：构建、化简、诱导子图与自我网络
"""

from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property
from typing import Literal

import numpy as np

from app.core.exceptions import GraphAnalyticsError, InvalidNodeError, LabelMismatch
from app.utils.logger import logger

DedupPolicy = Literal["drop", "strict"]


@dataclass(frozen=True)
class BuildReport:
    """构建过程中被丢弃的输入条目计数"""

    input_edges: int
    self_loops_dropped: int
    duplicates_dropped: int


@dataclass(frozen=True, eq=False)
class Graph:
    """不可变的简单无向图

    以 CSR 形式保存每个节点的升序邻居表：``indices[indptr[v]:indptr[v + 1]]``。
    没有自环与重边，邻接关系对称，度数之和等于边数的两倍。
    """

    n: int
    indptr: np.ndarray
    indices: np.ndarray
    build_report: BuildReport | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        self.indptr.flags.writeable = False
        self.indices.flags.writeable = False

    @classmethod
    def from_canonical_edges(cls, n: int, edges: np.ndarray, build_report: BuildReport | None = None) -> "Graph":
        """由规范边数组构建图

        Args:
            n: 节点数
            edges: 形状 (M, 2) 的数组，每行 u < v 且无重复
            build_report: 构建报告

        Returns:
            图对象
        """
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        src = np.concatenate([edges[:, 0], edges[:, 1]])
        dst = np.concatenate([edges[:, 1], edges[:, 0]])
        order = np.lexsort((dst, src))
        counts = np.bincount(src, minlength=n) if n > 0 else np.zeros(0, dtype=np.int64)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        return cls(n=int(n), indptr=indptr, indices=dst[order].astype(np.int64), build_report=build_report)

    @cached_property
    def degrees(self) -> np.ndarray:
        """每个节点的度数 d_G(v)"""
        degrees = np.diff(self.indptr)
        degrees.flags.writeable = False
        return degrees

    @property
    def m(self) -> int:
        """边数"""
        return int(self.indices.size // 2)

    @property
    def average_degree(self) -> float:
        """平均度 2M / n"""
        return 2.0 * self.m / self.n if self.n > 0 else 0.0

    def neighbors(self, v: int) -> np.ndarray:
        """节点 v 的升序邻居（只读视图）"""
        self.check_node(v)
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def check_node(self, v: int) -> None:
        """校验节点编号"""
        if not 0 <= int(v) < self.n:
            raise InvalidNodeError(f"node id {v} out of range [0, {self.n})")

    @cached_property
    def edges(self) -> np.ndarray:
        """按字典序排列的规范边数组，每行 u < v"""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        mask = src < self.indices
        edges = np.column_stack([src[mask], self.indices[mask]])
        edges.flags.writeable = False
        return edges

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.indices.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True, eq=False)
class NodeLabeling:
    """节点标签（DCBM 的社区编号 z_i 或党派标签）

    Attributes:
        labels: 每个节点的标签，取值在 [0, k)
        k: 标签字母表大小
    """

    labels: np.ndarray
    k: int

    def __post_init__(self) -> None:
        labels = np.asarray(self.labels, dtype=np.int64)
        if labels.ndim != 1:
            raise LabelMismatch("labels must be a one-dimensional sequence")
        if labels.size and (labels.min() < 0 or labels.max() >= self.k):
            raise LabelMismatch(f"label values must lie in [0, {self.k})")
        labels.flags.writeable = False
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_sequence(cls, labels: Iterable[int], k: int | None = None) -> "NodeLabeling":
        """由整数序列构建标签，k 缺省为最大标签 + 1"""
        array = np.asarray(list(labels), dtype=np.int64)
        if k is None:
            k = int(array.max()) + 1 if array.size else 0
        return cls(labels=array, k=int(k))

    @property
    def n(self) -> int:
        return int(self.labels.size)

    def check_covers(self, g: Graph) -> None:
        """校验标签覆盖图中所有节点"""
        if self.n != g.n:
            raise LabelMismatch(f"labeling has {self.n} entries but graph has {g.n} nodes")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NodeLabeling):
            return NotImplemented
        return self.k == other.k and np.array_equal(self.labels, other.labels)

    def __hash__(self) -> int:
        return hash((self.k, self.labels.tobytes()))


@dataclass(frozen=True, eq=False)
class MultiGraphDraft:
    """允许自环与重边的多重图草稿，仅作为 LCD 生成过程的中间结果"""

    n: int
    edges: np.ndarray

    @property
    def edge_count(self) -> int:
        return int(len(self.edges))

    @property
    def self_loop_count(self) -> int:
        return int(np.count_nonzero(self.edges[:, 0] == self.edges[:, 1])) if len(self.edges) else 0


@dataclass(frozen=True)
class InducedSubgraph:
    """诱导子图及其节点映射（新编号 i 对应原编号 mapping[i]）"""

    graph: Graph
    mapping: np.ndarray


def _as_pair_array(edges: Iterable[tuple[int, int]] | np.ndarray) -> np.ndarray:
    """把输入边转换为 (k, 2) 的非负整数数组"""
    if isinstance(edges, np.ndarray):
        raw = edges
    else:
        raw = list(edges)
        if not raw:
            return np.zeros((0, 2), dtype=np.int64)
        for pair in raw:
            if isinstance(pair, str | bytes) or not hasattr(pair, "__len__") or len(pair) != 2:
                raise GraphAnalyticsError(f"malformed edge {pair!r}: expected a pair of node ids")
    try:
        arr = np.asarray(raw)
    except ValueError as e:
        raise GraphAnalyticsError(f"malformed edge list: {e}") from e
    if arr.size == 0:
        return np.zeros((0, 2), dtype=np.int64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise GraphAnalyticsError(f"malformed edge list: expected shape (k, 2), got {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        raise GraphAnalyticsError("malformed edge list: node ids must be integers")
    arr = arr.astype(np.int64)
    if (arr < 0).any():
        raise GraphAnalyticsError("malformed edge list: node ids must be nonnegative")
    return arr


def _canonicalize(pairs: np.ndarray, n: int) -> tuple[np.ndarray, int, int]:
    """去掉自环、合并重边，返回规范边数组与两类丢弃计数"""
    loops = pairs[:, 0] == pairs[:, 1]
    loop_count = int(np.count_nonzero(loops))
    kept = pairs[~loops]
    lo = np.minimum(kept[:, 0], kept[:, 1])
    hi = np.maximum(kept[:, 0], kept[:, 1])
    keys = np.unique(lo * np.int64(max(n, 1)) + hi)
    canonical = np.column_stack([keys // max(n, 1), keys % max(n, 1)]).astype(np.int64)
    return canonical, loop_count, int(len(kept) - len(keys))


def build_graph(
    edges: Iterable[tuple[int, int]] | np.ndarray,
    n: int | None = None,
    dedup_policy: DedupPolicy = "drop",
) -> Graph:
    """由边列表确定性地构建简单图

    自环被丢弃、重边（包括反向重复）被合并，计数写入 ``build_report`` 并记录警告。
    结果与输入边的顺序无关。

    Args:
        edges: 节点编号对
        n: 显式节点数，缺省为最大编号 + 1
        dedup_policy: ``drop`` 丢弃并告警；``strict`` 遇到自环或重边即报错

    Returns:
        图对象

    Raises:
        GraphAnalyticsError: 边格式错误或 strict 模式下出现自环/重边
        InvalidNodeError: 显式 n 小于最大编号 + 1
    """
    if dedup_policy not in ("drop", "strict"):
        raise ValueError(f"unknown dedup_policy {dedup_policy!r}")

    pairs = _as_pair_array(edges)
    min_n = int(pairs.max()) + 1 if len(pairs) else 0
    if n is None:
        n = min_n
    elif n < min_n:
        raise InvalidNodeError(f"explicit node count {n} is smaller than max node id + 1 = {min_n}")

    canonical, loops, duplicates = _canonicalize(pairs, n)
    if loops or duplicates:
        if dedup_policy == "strict":
            raise GraphAnalyticsError(f"edge list has {loops} self-loops and {duplicates} duplicate edges")
        logger.warning(f"构建图时丢弃条目 | 自环: {loops} | 重边: {duplicates}")

    report = BuildReport(input_edges=len(pairs), self_loops_dropped=loops, duplicates_dropped=duplicates)
    graph = Graph.from_canonical_edges(n, canonical, build_report=report)
    logger.debug(f"图构建完成 | 节点数: {graph.n} | 边数: {graph.m}")
    return graph


def simplify(draft: MultiGraphDraft) -> Graph:
    """把多重图草稿化简为简单图：删除自环、合并平行边"""
    pairs = _as_pair_array(draft.edges)
    canonical, loops, duplicates = _canonicalize(pairs, draft.n)
    logger.debug(f"多重图化简 | 自环: {loops} | 平行边: {duplicates} | 保留边: {len(canonical)}")
    report = BuildReport(input_edges=len(pairs), self_loops_dropped=loops, duplicates_dropped=duplicates)
    return Graph.from_canonical_edges(draft.n, canonical, build_report=report)


def induced_subgraph(g: Graph, nodes: Iterable[int] | np.ndarray) -> InducedSubgraph:
    """节点集合上的诱导子图

    只保留两端都在集合内的边；节点按原编号升序稠密重编号。

    Args:
        g: 原图
        nodes: 节点集合

    Returns:
        诱导子图与映射

    Raises:
        InvalidNodeError: 节点编号非法
    """
    keep = np.unique(np.asarray(list(nodes) if not isinstance(nodes, np.ndarray) else nodes, dtype=np.int64))
    if keep.size and (keep[0] < 0 or keep[-1] >= g.n):
        raise InvalidNodeError(f"node ids must lie in [0, {g.n})")

    relabel = np.full(g.n, -1, dtype=np.int64)
    relabel[keep] = np.arange(keep.size, dtype=np.int64)
    edges = g.edges
    mask = (relabel[edges[:, 0]] >= 0) & (relabel[edges[:, 1]] >= 0)
    sub_edges = relabel[edges[mask]]
    keep.flags.writeable = False
    return InducedSubgraph(graph=Graph.from_canonical_edges(int(keep.size), sub_edges), mapping=keep)


def ego_network(g: Graph, center: int) -> Graph:
    """一步自我网络：中心节点及其邻居上的诱导子图"""
    g.check_node(center)
    members = np.concatenate([[int(center)], g.neighbors(center)])
    return induced_subgraph(g, members).graph
