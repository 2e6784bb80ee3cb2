"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: subgraph_stats.py
@DateTime: 2025-07-04
@Docs: 边/楔形/三角形精确计数与 Ê、V̂、T̂、ρ̂、聚类系数
"""

from dataclasses import asdict, dataclass
from fractions import Fraction
from math import comb
from typing import Any, Literal

import numpy as np

from app.core.exceptions import DegenerateGraph, RhoUndefined
from app.graph.graph import Graph
from app.utils.logger import log_function_calls, logger
from app.utils.parallel import parallel_map
from config.model_config import ModelConfig

TriangleMethod = Literal["hash", "merge"]


@dataclass(frozen=True)
class SubgraphCounts:
    """精确子图计数

    Attributes:
        m_edges: 边数 M
        wedges: 无序 2-路径数 W = Σ_v C(d_v, 2)
        triangles: 三角形数 Δ
    """

    m_edges: int
    wedges: int
    triangles: int


@dataclass(frozen=True)
class GraphStats:
    """单个图的统计量，无定义的量为 None"""

    n: int
    edges: int
    wedges: int
    triangles: int
    e_hat: float
    v_hat: float
    t_hat: float
    rho_hat: float | None
    cc_hat: float | None
    cc_ratio: float | None

    @property
    def rho_defined(self) -> bool:
        return self.rho_hat is not None

    def to_dict(self) -> dict[str, Any]:
        """扁平 JSON 对象，无定义为 null"""
        return asdict(self)


def _orient_by_degree(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """按 (度数, 编号) 全序给每条边定向，返回出边 CSR"""
    edges = g.edges
    deg = g.degrees
    u, v = edges[:, 0], edges[:, 1]
    forward = (deg[u] < deg[v]) | ((deg[u] == deg[v]) & (u < v))
    src = np.where(forward, u, v)
    dst = np.where(forward, v, u)
    order = np.lexsort((dst, src))
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=g.n), out=indptr[1:])
    return indptr, dst[order]


def _count_chunk_hash(csr: tuple[np.ndarray, np.ndarray], bounds: tuple[int, int]) -> int:
    """标记数组求交: 对每个节点 u，统计其出邻居的出邻居中落在 u 出邻居集合内的个数"""
    indptr, indices = csr
    start, stop = bounds
    mark = np.zeros(indptr.size - 1, dtype=bool)
    total = 0
    for u in range(start, stop):
        a, b = indptr[u], indptr[u + 1]
        if b - a < 2:
            continue
        nbrs = indices[a:b]
        starts = indptr[nbrs]
        lengths = indptr[nbrs + 1] - starts
        size = int(lengths.sum())
        if size == 0:
            continue
        offsets = np.repeat(starts - np.cumsum(lengths) + lengths, lengths) + np.arange(size)
        mark[nbrs] = True
        total += int(np.count_nonzero(mark[indices[offsets]]))
        mark[nbrs] = False
    return total


def _count_chunk_merge(csr: tuple[np.ndarray, np.ndarray], bounds: tuple[int, int]) -> int:
    """有序邻居表归并求交: 对每条出边 (u, v) 统计 |out(u) ∩ out(v)|"""
    indptr, indices = csr
    start, stop = bounds
    total = 0
    for u in range(start, stop):
        out_u = indices[indptr[u] : indptr[u + 1]]
        if out_u.size < 2:
            continue
        for v in out_u:
            out_v = indices[indptr[v] : indptr[v + 1]]
            if out_v.size:
                total += int(np.intersect1d(out_u, out_v, assume_unique=True).size)
    return total


def count_triangles(g: Graph, workers: int = 1, method: TriangleMethod | None = None) -> int:
    """精确三角形计数

    按度数定向后每个三角形恰好被其最低秩顶点计一次；节点区间的划分固定，
    各块结果做整数求和，因此与进程数无关。

    Args:
        g: 图
        workers: 并行进程数
        method: ``hash``（标记数组）或 ``merge``（有序表归并）

    Returns:
        三角形数
    """
    method = method or ModelConfig.TRIANGLE_METHOD
    if method not in ("hash", "merge"):
        raise ValueError(f"unknown triangle method {method!r}")
    if g.m < 3:
        return 0

    indptr, indices = _orient_by_degree(g)
    step = ModelConfig.TRIANGLE_CHUNK_NODES
    tasks = [(start, min(start + step, g.n)) for start in range(0, g.n, step)]
    worker_fn = _count_chunk_hash if method == "hash" else _count_chunk_merge
    return int(sum(parallel_map(worker_fn, tasks, workers, shared=(indptr, indices))))


def count_subgraphs(g: Graph, workers: int = 1, method: TriangleMethod | None = None) -> SubgraphCounts:
    """精确统计边数 M、楔形数 W 与三角形数 Δ（空图全为 0）"""
    deg = g.degrees.astype(np.int64)
    wedges = int(np.sum(deg * (deg - 1) // 2))
    triangles = count_triangles(g, workers=workers, method=method)
    return SubgraphCounts(m_edges=g.m, wedges=wedges, triangles=triangles)


def stats_from_counts(n: int, counts: SubgraphCounts) -> GraphStats:
    """由计数计算统计量

    比值先以精确有理数求出再转为双精度，避免 C(N,3)^3 这类中间量溢出。

    Raises:
        DegenerateGraph: n < 3
    """
    if n < 3:
        raise DegenerateGraph(f"statistics need at least 3 nodes, got n={n}")

    m, w, t = counts.m_edges, counts.wedges, counts.triangles
    c2, c3 = comb(n, 2), comb(n, 3)

    rho_hat = cc_hat = cc_ratio = None
    if w > 0:
        # ρ̂ = T̂Ê³/V̂³ = 27·Δ·M³·C(N,3)² / (C(N,2)³·W³)
        rho_hat = float(Fraction(27 * t * m**3 * c3**2, c2**3 * w**3))
        cc_hat = float(Fraction(3 * t, w))
        cc_ratio = float(Fraction(9 * t, w))

    return GraphStats(
        n=n,
        edges=m,
        wedges=w,
        triangles=t,
        e_hat=float(Fraction(m, c2)),
        v_hat=float(Fraction(w, 3 * c3)),
        t_hat=float(Fraction(t, c3)),
        rho_hat=rho_hat,
        cc_hat=cc_hat,
        cc_ratio=cc_ratio,
    )


@log_function_calls()
def graph_stats(g: Graph, workers: int = 1, method: TriangleMethod | None = None) -> GraphStats:
    """计算 Ê、V̂、T̂、ρ̂、ĉc 与 3T̂/V̂

    W = 0 时 ρ̂、ĉc、cc_ratio 为 None（无定义），而不是 0。

    Raises:
        DegenerateGraph: n < 3
    """
    if g.n < 3:
        raise DegenerateGraph(f"statistics need at least 3 nodes, got n={g.n}")
    stats = stats_from_counts(g.n, count_subgraphs(g, workers=workers, method=method))
    if stats.rho_hat is None:
        logger.debug(f"图没有楔形，ρ̂ 无定义 | 节点数: {g.n} | 边数: {g.m}")
    return stats


def rho_matrix_form(g: Graph, counts: SubgraphCounts | None = None) -> float:
    """矩阵形式的 ρ̂

    ρ̂ = (N−2)² tr(A³)(1'A1)³ / [N(N−1)(1'A²1 − tr(A²))³]，
    其中 tr(A³) = 6Δ，1'A1 = 2M，1'A²1 − tr(A²) = 2W，不构造稠密矩阵。

    Raises:
        DegenerateGraph: n < 3
        RhoUndefined: W = 0
    """
    if g.n < 3:
        raise DegenerateGraph(f"statistics need at least 3 nodes, got n={g.n}")
    counts = counts or count_subgraphs(g)
    if counts.wedges == 0:
        raise RhoUndefined("graph has no wedges; rho is undefined")

    n = float(g.n)
    trace_a3 = 6.0 * counts.triangles
    total_a = 2.0 * counts.m_edges
    wedge_term = 2.0 * counts.wedges
    return (n - 2.0) ** 2 * trace_a3 * total_a**3 / (n * (n - 1.0) * wedge_term**3)
