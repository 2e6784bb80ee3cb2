"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: testing.py
@DateTime: 2025-07-06
@Docs: ρ̂ 的渐近正态置信区间、两样本 in-out-ratio 检验与功效模拟
"""

import math
from dataclasses import asdict, dataclass, field
from math import comb
from typing import Any

from app.core.exceptions import DegenerateGraph, DegenerateStatistic
from app.generators.block_models import DcbmParams, gen_dcbm
from app.graph.graph import Graph
from app.inference.normal import inv_norm_cdf
from app.stats.subgraph_stats import GraphStats, graph_stats
from app.utils.logger import log_function_calls, logger
from app.utils.parallel import derive_seed, parallel_map
from app.utils.validators import ParamValidator
from config.app_config import AppConfig
from config.model_config import ModelConfig


@dataclass(frozen=True)
class RhoEstimate:
    """ρ̂ 及其 1−α 置信区间

    std_err = ρ̂ / √(C(n,3)·T̂) = ρ̂ / √Δ
    """

    rho_hat: float
    n: int
    t_hat: float
    std_err: float
    alpha: float
    ci_low: float
    ci_high: float

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class TestResult:
    """两样本检验结果"""

    __test__ = False

    rho1_hat: float
    rho2_hat: float
    d1: float
    d2: float
    k: float
    alpha: float
    threshold: float
    statistic: float
    reject: bool
    diagnostics: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class PowerResult:
    """功效（或检验水平）模拟结果

    Attributes:
        reps: 重复次数
        rejections: 拒绝次数
        power: 拒绝比例
        replicates: 每次重复的 (rho1, rho2, statistic, threshold, reject)
    """

    reps: int
    rejections: int
    power: float
    alpha: float
    k: float
    master_seed: int
    replicates: list[dict[str, Any]] = field(default_factory=list)

    def to_dict(self, include_replicates: bool = False) -> dict[str, Any]:
        data = asdict(self)
        if not include_replicates:
            data.pop("replicates")
        return data


def rejection_threshold(alpha: float, k: float, d1: float, d2: float) -> float:
    """拒绝阈值 c = Φ⁻¹(1−α/2)·K·√6·√(1/d₁³ + 1/d₂³)"""
    alpha = ParamValidator.alpha(alpha)
    z = inv_norm_cdf(1.0 - alpha / 2.0)
    return z * k * math.sqrt(6.0) * math.sqrt(1.0 / d1**3 + 1.0 / d2**3)


def _plugin_std_err(stats: GraphStats) -> float | None:
    if stats.rho_hat is None or stats.triangles == 0:
        return None
    return stats.rho_hat / math.sqrt(stats.triangles)


def rho_confidence_interval(g: Graph, alpha: float = ModelConfig.DEFAULT_ALPHA, workers: int = 1) -> RhoEstimate:
    """基于渐近正态性 √(C(N,3)T)(ρ̂−ρ)/ρ ⇝ N(0,1) 的置信区间

    以 T̂、ρ̂ 代替总体量，区间为 ρ̂·(1 ± z/√(C(n,3)·T̂))，下端截断于 0。
    密度区间 N⁻¹ ≪ p ≪ N^{−2/3} 是渐近假设，这里不做检查。

    Raises:
        DegenerateStatistic: 没有三角形
    """
    alpha = ParamValidator.alpha(alpha)
    try:
        stats = graph_stats(g, workers=workers)
    except DegenerateGraph as e:
        raise DegenerateStatistic(str(e)) from e
    if stats.rho_hat is None or stats.triangles == 0:
        raise DegenerateStatistic("graph has no triangles; the interval for rho is degenerate")

    z = inv_norm_cdf(1.0 - alpha / 2.0)
    std_err = stats.rho_hat / math.sqrt(comb(g.n, 3) * stats.t_hat)
    half = z * std_err
    return RhoEstimate(
        rho_hat=stats.rho_hat,
        n=g.n,
        t_hat=stats.t_hat,
        std_err=std_err,
        alpha=alpha,
        ci_low=max(0.0, stats.rho_hat - half),
        ci_high=stats.rho_hat + half,
    )


def _resolve_k(k: float | None) -> float:
    if k is None:
        logger.warning(f"未指定块数上界 K，使用默认值 {ModelConfig.DEFAULT_TEST_K}；K 偏小会使检验偏激进")
        return float(ModelConfig.DEFAULT_TEST_K)
    return ParamValidator.positive(k, "k")


def compare_stats(
    s1: GraphStats,
    s2: GraphStats,
    k: float | None = None,
    alpha: float = ModelConfig.DEFAULT_ALPHA,
) -> TestResult:
    """由两个图的统计量执行两样本检验

    H₀: r₁ = r₂。当 |ρ̂₁−ρ̂₂| > c 时拒绝，平均度取观测值 d = 2M/n。

    Raises:
        DegenerateStatistic: 任一 ρ̂ 无定义或平均度为 0
    """
    alpha = ParamValidator.alpha(alpha)
    k = _resolve_k(k)
    if s1.rho_hat is None or s2.rho_hat is None:
        raise DegenerateStatistic("both graphs need a defined rho_hat for the two-sample test")
    d1 = 2.0 * s1.edges / s1.n
    d2 = 2.0 * s2.edges / s2.n
    if d1 <= 0 or d2 <= 0:
        raise DegenerateStatistic("both graphs need a positive average degree")

    threshold = rejection_threshold(alpha, k, d1, d2)
    statistic = abs(s1.rho_hat - s2.rho_hat)
    return TestResult(
        rho1_hat=s1.rho_hat,
        rho2_hat=s2.rho_hat,
        d1=d1,
        d2=d2,
        k=k,
        alpha=alpha,
        threshold=threshold,
        statistic=statistic,
        reject=statistic > threshold,
        diagnostics={
            "std_err1": _plugin_std_err(s1),
            "std_err2": _plugin_std_err(s2),
            "triangles1": s1.triangles,
            "triangles2": s2.triangles,
        },
    )


@log_function_calls()
def two_sample_test(
    g1: Graph,
    g2: Graph,
    k: float | None = None,
    alpha: float = ModelConfig.DEFAULT_ALPHA,
    workers: int = 1,
) -> TestResult:
    """两个网络的 in-out-ratio 是否相同

    Args:
        g1: 第一个图
        g2: 第二个图
        k: 块数上界（ρ < K），缺省时告警并取 2
        alpha: 显著性水平
        workers: 三角形计数的进程数

    Returns:
        检验结果
    """
    try:
        s1 = graph_stats(g1, workers=workers)
        s2 = graph_stats(g2, workers=workers)
    except DegenerateGraph as e:
        raise DegenerateStatistic(str(e)) from e
    return compare_stats(s1, s2, k=k, alpha=alpha)


def _power_replicate(task: tuple[DcbmParams, DcbmParams, float, float, int, int]) -> dict[str, Any]:
    params1, params2, k, alpha, master_seed, rep = task
    s1 = graph_stats(gen_dcbm(params1.with_seed(derive_seed(master_seed, rep, 0))).graph)
    s2 = graph_stats(gen_dcbm(params2.with_seed(derive_seed(master_seed, rep, 1))).graph)
    try:
        result = compare_stats(s1, s2, k=k, alpha=alpha)
    except DegenerateStatistic:
        logger.debug(f"功效模拟: 第 {rep} 次重复统计量退化，按不拒绝计")
        return {"rep": rep, "rho1_hat": s1.rho_hat, "rho2_hat": s2.rho_hat, "statistic": None, "threshold": None, "reject": False}
    return {
        "rep": rep,
        "rho1_hat": result.rho1_hat,
        "rho2_hat": result.rho2_hat,
        "statistic": result.statistic,
        "threshold": result.threshold,
        "reject": result.reject,
    }


@log_function_calls()
def power_experiment(
    spec: tuple[DcbmParams, DcbmParams],
    reps: int,
    alpha: float = ModelConfig.DEFAULT_ALPHA,
    k: float | None = None,
    master_seed: int = AppConfig.DEFAULT_SEED,
    workers: int = 1,
) -> PowerResult:
    """Monte Carlo 估计两样本检验的拒绝率

    第 rep 次重复的两个图分别使用由 (master_seed, rep, 0/1) 派生的种子，
    结果与进程数无关。两组参数相同时得到的是检验水平。

    Args:
        spec: 两组 DCBM 参数（其中的 seed 被忽略）
        reps: 重复次数
        alpha: 显著性水平
        k: 检验使用的块数上界，缺省为两组参数块数的较大者
        master_seed: 主种子
        workers: 进程数
    """
    params1, params2 = spec
    reps = ParamValidator.integer_at_least(reps, 1, "reps")
    alpha = ParamValidator.alpha(alpha)
    k = float(max(params1.k, params2.k)) if k is None else ParamValidator.positive(k, "k")

    tasks = [(params1, params2, k, alpha, master_seed, rep) for rep in range(reps)]
    replicates = parallel_map(_power_replicate, tasks, workers)
    rejections = sum(1 for row in replicates if row["reject"])
    logger.info(f"功效模拟完成 | 重复: {reps} | 拒绝: {rejections} | r1: {params1.r:.4g} | r2: {params2.r:.4g}")
    return PowerResult(
        reps=reps,
        rejections=rejections,
        power=rejections / reps,
        alpha=alpha,
        k=k,
        master_seed=int(master_seed),
        replicates=replicates,
    )
