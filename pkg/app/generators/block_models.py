"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: block_models.py
@DateTime: 2025-07-05
@Docs: Erdős–Rényi 与度修正随机块模型（DCBM）生成器
"""

import math
from dataclasses import dataclass, field, replace

import numpy as np

from app.core.exceptions import InfeasibleParameters, InvalidDistribution
from app.generators.theta import ThetaLaw
from app.graph.graph import Graph, NodeLabeling
from app.utils.logger import log_function_calls, logger
from app.utils.parallel import derive_rng, parallel_map
from app.utils.validators import ParamValidator
from config.app_config import AppConfig
from config.model_config import ModelConfig

# 随机流编号: 节点级（标签、θ）与按行块划分的边
_NODE_STREAM = 0
_EDGE_STREAM = 1

# 单个行块的矩形元素上限，控制内存
_MAX_BLOCK_CELLS = 4_000_000


@dataclass(frozen=True)
class ErParams:
    """ER 模型参数"""

    n: int
    p: float
    seed: int = AppConfig.DEFAULT_SEED

    def __post_init__(self) -> None:
        ParamValidator.integer_at_least(self.n, 0, "n")
        ParamValidator.probability(self.p, "p")


@dataclass(frozen=True)
class DcbmParams:
    """DCBM 参数

    Attributes:
        n: 节点数
        k: 块数
        p: 块内基础概率
        q: 块间基础概率
        theta: θ 分布
        pi: 块比例，缺省为均匀 1/K
        seed: 随机种子
    """

    n: int
    k: int
    p: float
    q: float
    theta: ThetaLaw = field(default_factory=ThetaLaw.constant)
    pi: tuple[float, ...] | None = None
    seed: int = AppConfig.DEFAULT_SEED

    def __post_init__(self) -> None:
        ParamValidator.integer_at_least(self.n, 0, "n")
        ParamValidator.integer_at_least(self.k, 1, "k")
        ParamValidator.probability(self.p, "p")
        ParamValidator.probability(self.q, "q")
        if not 0.0 < self.q <= self.p:
            raise InvalidDistribution(f"require 0 < q <= p <= 1, got p={self.p}, q={self.q}")
        if self.pi is not None:
            if len(self.pi) != self.k or any(x < 0 for x in self.pi) or not math.isclose(sum(self.pi), 1.0, abs_tol=1e-9):
                raise InvalidDistribution(f"pi must be {self.k} nonnegative proportions summing to 1, got {self.pi}")

    @property
    def r(self) -> float:
        return self.p / self.q

    @property
    def block_proportions(self) -> np.ndarray:
        if self.pi is None:
            return np.full(self.k, 1.0 / self.k)
        return np.asarray(self.pi, dtype=float)

    def with_seed(self, seed: int) -> "DcbmParams":
        return replace(self, seed=int(seed))

    def describe(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "p": self.p,
            "q": self.q,
            "r": self.r,
            "pi": self.block_proportions.tolist(),
            "theta": self.theta.describe(),
            "seed": self.seed,
        }


@dataclass(frozen=True)
class DcbmSample:
    """DCBM 抽样结果"""

    graph: Graph
    labels: NodeLabeling
    theta: np.ndarray
    clamp_count: int


def _row_blocks(n: int) -> list[tuple[int, int, int]]:
    """固定的行块划分 (块编号, 起始行, 结束行)，只依赖 n"""
    rows = max(1, min(ModelConfig.ROW_BLOCK_SIZE, _MAX_BLOCK_CELLS // max(n, 1)))
    return [(b, start, min(start + rows, n)) for b, start in enumerate(range(0, n, rows))]


def _sample_er_block(task: tuple[int, int, int, int, int, float]) -> np.ndarray:
    seed, block, start, stop, n, p = task
    rng = derive_rng(seed, _EDGE_STREAM, block)
    uniform = rng.random((stop - start, n))
    rows = np.arange(start, stop)[:, None]
    cols = np.arange(n)[None, :]
    hit = (uniform < p) & (cols > rows)
    r, c = np.nonzero(hit)
    return np.column_stack([r + start, c]).astype(np.int64)


def _sample_dcbm_block(task: tuple) -> tuple[np.ndarray, int]:
    seed, block, start, stop, theta, labels, b_matrix = task
    n = theta.size
    rng = derive_rng(seed, _EDGE_STREAM, block)
    uniform = rng.random((stop - start, n))
    rows = np.arange(start, stop)[:, None]
    upper = np.arange(n)[None, :] > rows
    prob = theta[start:stop, None] * theta[None, :] * b_matrix[labels[start:stop, None], labels[None, :]]
    clamped = int(np.count_nonzero((prob > 1.0) & upper))
    hit = (uniform < np.minimum(prob, 1.0)) & upper
    r, c = np.nonzero(hit)
    return np.column_stack([r + start, c]).astype(np.int64), clamped


def _collect(parts: list[np.ndarray]) -> np.ndarray:
    return np.concatenate(parts) if parts else np.zeros((0, 2), dtype=np.int64)


@log_function_calls()
def gen_er(params: ErParams, workers: int = 1) -> Graph:
    """ER(n, p): 每个节点对独立地以概率 p 连边

    每个行块的随机数由 (seed, 块编号) 派生，结果与进程数无关。
    """
    tasks = [(params.seed, b, start, stop, params.n, params.p) for b, start, stop in _row_blocks(params.n)]
    edges = _collect(parallel_map(_sample_er_block, tasks, workers))
    graph = Graph.from_canonical_edges(params.n, edges)
    logger.debug(f"ER 生成完成 | n: {params.n} | p: {params.p} | 边数: {graph.m}")
    return graph


@log_function_calls()
def gen_dcbm(params: DcbmParams, workers: int = 1) -> DcbmSample:
    """DCBM: z_i ~ Multinomial(π)，A_ij ~ Bernoulli(θ_iθ_jB_{z_i z_j})

    超过 1 的连边概率被截断为 1，截断的节点对数记录在 clamp_count 中。
    """
    node_rng = derive_rng(params.seed, _NODE_STREAM)
    labels = node_rng.choice(params.k, size=params.n, p=params.block_proportions).astype(np.int64)
    theta = params.theta.sample(params.n, node_rng)

    b_matrix = np.full((params.k, params.k), params.q)
    np.fill_diagonal(b_matrix, params.p)

    tasks = [(params.seed, b, start, stop, theta, labels, b_matrix) for b, start, stop in _row_blocks(params.n)]
    results = parallel_map(_sample_dcbm_block, tasks, workers)
    edges = _collect([part for part, _ in results])
    clamp_count = sum(count for _, count in results)
    if clamp_count:
        logger.warning(f"DCBM 连边概率被截断 | 节点对数: {clamp_count}")

    graph = Graph.from_canonical_edges(params.n, edges)
    logger.debug(f"DCBM 生成完成 | n: {params.n} | K: {params.k} | r: {params.r:.4g} | 边数: {graph.m}")
    return DcbmSample(
        graph=graph,
        labels=NodeLabeling(labels=labels, k=params.k),
        theta=theta,
        clamp_count=clamp_count,
    )


def dcbm_from_degree(
    n: int,
    k: int,
    r: float,
    lam: float,
    theta: ThetaLaw | None = None,
    seed: int = AppConfig.DEFAULT_SEED,
) -> DcbmParams:
    """按平均度 λ 与 in-out-ratio r 求 DCBM 的 p、q

    λ = (n−1)(𝔼θ)²(p + (K−1)q)/K，q = p/r，
    即 p = λKr / ((n−1)(𝔼θ)²(r+K−1))。

    Raises:
        InfeasibleParameters: 推导出的 p > 1
    """
    theta = theta or ThetaLaw.constant()
    ParamValidator.integer_at_least(n, 2, "n")
    ParamValidator.integer_at_least(k, 1, "k")
    r = ParamValidator.positive(r, "r")
    lam = ParamValidator.positive(lam, "lambda")
    if r < 1.0:
        raise InfeasibleParameters(f"in-out-ratio must be >= 1 (q <= p), got r={r}")

    mean_theta = theta.mean()
    p = lam * k * r / ((n - 1) * mean_theta**2 * (r + k - 1))
    if p > 1.0:
        raise InfeasibleParameters(f"average degree {lam} is infeasible for n={n}, K={k}, r={r}: p={p:.4f} > 1")
    return DcbmParams(n=n, k=k, p=p, q=p / r, theta=theta, seed=int(seed))
