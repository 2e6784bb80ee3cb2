"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: __init__.py
@DateTime: 2025-07-06
@Docs: 统计推断模块初始化
"""

from app.stats.ranking import rank_auc

from .normal import inv_norm_cdf, norm_cdf
from .simulation import (
    CoverageResult,
    SimulationResult,
    clustering_simulation,
    coverage_experiment,
    protocol_design,
)
from .testing import (
    PowerResult,
    RhoEstimate,
    TestResult,
    compare_stats,
    power_experiment,
    rejection_threshold,
    rho_confidence_interval,
    two_sample_test,
)

__all__ = [
    "CoverageResult",
    "PowerResult",
    "RhoEstimate",
    "SimulationResult",
    "TestResult",
    "clustering_simulation",
    "compare_stats",
    "coverage_experiment",
    "inv_norm_cdf",
    "norm_cdf",
    "power_experiment",
    "protocol_design",
    "rank_auc",
    "rejection_threshold",
    "rho_confidence_interval",
    "two_sample_test",
]
