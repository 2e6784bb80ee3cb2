"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: test_inference.py
@DateTime: 2025-07-14
@Docs: 正态分位数、置信区间、两样本检验与功效模拟
"""

import math

import numpy as np
import pytest
from scipy import stats as sps

from app.core.exceptions import DegenerateStatistic, OutOfRange
from app.generators.block_models import dcbm_from_degree, gen_dcbm
from app.graph.graph import build_graph
from app.inference.normal import inv_norm_cdf, norm_cdf
from app.inference.testing import (
    compare_stats,
    power_experiment,
    rejection_threshold,
    rho_confidence_interval,
    two_sample_test,
)
from app.stats.ranking import rank_auc
from app.stats.subgraph_stats import graph_stats


@pytest.fixture(scope="module")
def community_graph():
    return gen_dcbm(dcbm_from_degree(600, 3, 10.0, 30.0, seed=1)).graph


@pytest.fixture(scope="module")
def er_like_graph():
    return gen_dcbm(dcbm_from_degree(600, 3, 1.0, 30.0, seed=2)).graph


class TestInverseNormal:
    def test_two_sided_five_percent_quantile(self):
        assert inv_norm_cdf(0.975) == pytest.approx(1.959964, abs=1e-6)

    def test_median(self):
        assert inv_norm_cdf(0.5) == 0.0

    @pytest.mark.parametrize("u", [2.0**-30, 2.0**-10, 0.0078125, 0.125, 0.25, 0.375])
    def test_exact_antisymmetry(self, u):
        assert inv_norm_cdf(u) == -inv_norm_cdf(1.0 - u)

    def test_matches_reference_quantiles(self):
        for u in np.linspace(1e-6, 1 - 1e-6, 201):
            assert inv_norm_cdf(float(u)) == pytest.approx(sps.norm.ppf(u), abs=1e-8)

    def test_inverts_cdf(self):
        for x in (-4.0, -1.0, 0.3, 2.5):
            assert inv_norm_cdf(norm_cdf(x)) == pytest.approx(x, abs=1e-9)

    @pytest.mark.parametrize("u", [0.0, 1.0, -0.5, 1.5, math.nan])
    def test_outside_open_interval(self, u):
        with pytest.raises(OutOfRange):
            inv_norm_cdf(u)


class TestConfidenceInterval:
    def test_interval_around_estimate(self, community_graph):
        estimate = rho_confidence_interval(community_graph)
        stats = graph_stats(community_graph)
        assert estimate.rho_hat == stats.rho_hat
        assert estimate.ci_low < estimate.rho_hat < estimate.ci_high
        assert estimate.std_err == pytest.approx(stats.rho_hat / math.sqrt(stats.triangles), rel=1e-9)
        assert estimate.ci_high - estimate.rho_hat == pytest.approx(1.959964 * estimate.std_err, rel=1e-6)

    def test_lower_end_clipped_at_zero(self):
        estimate = rho_confidence_interval(build_graph([(0, 1), (1, 2), (0, 2), (2, 3)], n=40))
        assert estimate.ci_low == 0.0

    def test_no_triangles(self, star):
        with pytest.raises(DegenerateStatistic):
            rho_confidence_interval(star)

    def test_too_small_graph(self):
        with pytest.raises(DegenerateStatistic):
            rho_confidence_interval(build_graph([(0, 1)]))


class TestTwoSample:
    def test_threshold_value(self):
        assert rejection_threshold(0.05, 3, 100.0, 100.0) == pytest.approx(0.0203685, abs=1e-6)

    def test_threshold_shrinks_with_degree(self):
        assert rejection_threshold(0.05, 3, 40.0, 40.0) < rejection_threshold(0.05, 3, 10.0, 10.0)

    def test_identical_graphs_do_not_reject(self, community_graph):
        result = two_sample_test(community_graph, community_graph, k=3)
        assert result.statistic == 0.0
        assert not result.reject

    def test_different_ratios_reject(self, community_graph, er_like_graph):
        result = two_sample_test(community_graph, er_like_graph, k=3)
        assert result.reject
        assert result.statistic > result.threshold

    def test_symmetric_in_the_two_graphs(self, community_graph, er_like_graph):
        forward = two_sample_test(community_graph, er_like_graph, k=3)
        backward = two_sample_test(er_like_graph, community_graph, k=3)
        assert forward.statistic == backward.statistic
        assert forward.threshold == backward.threshold
        assert forward.reject == backward.reject

    def test_rejection_is_monotone_in_alpha(self, community_graph):
        other = gen_dcbm(dcbm_from_degree(600, 3, 6.0, 30.0, seed=3)).graph
        s1, s2 = graph_stats(community_graph), graph_stats(other)
        results = [compare_stats(s1, s2, k=3, alpha=a) for a in (0.001, 0.01, 0.05, 0.1, 0.2, 0.5)]
        thresholds = [r.threshold for r in results]
        assert thresholds == sorted(thresholds, reverse=True)
        assert len(set(thresholds)) == len(thresholds)
        decisions = [r.reject for r in results]
        # 一旦在某个 α 下拒绝，更大的 α 也拒绝
        assert decisions == sorted(decisions)

    def test_default_k(self, community_graph):
        assert two_sample_test(community_graph, community_graph).k == 2.0

    def test_undefined_rho(self, community_graph):
        empty = graph_stats(build_graph([], n=10))
        with pytest.raises(DegenerateStatistic):
            compare_stats(graph_stats(community_graph), empty, k=3)

    def test_result_serializes(self, community_graph, er_like_graph):
        data = two_sample_test(community_graph, er_like_graph, k=3).to_dict()
        assert set(data) >= {"rho1_hat", "rho2_hat", "threshold", "statistic", "reject", "diagnostics"}


class TestPower:
    def test_alternative_is_detected(self):
        spec = (dcbm_from_degree(300, 3, 1.0, 30.0), dcbm_from_degree(300, 3, 20.0, 30.0))
        result = power_experiment(spec, reps=10, master_seed=4)
        assert result.power >= 0.9
        assert result.k == 3.0

    def test_reproducible_and_worker_independent(self):
        spec = (dcbm_from_degree(200, 3, 8.0, 20.0), dcbm_from_degree(200, 3, 8.0, 20.0))
        a = power_experiment(spec, reps=6, master_seed=12, workers=1)
        b = power_experiment(spec, reps=6, master_seed=12, workers=2)
        assert a.replicates == b.replicates
        assert a.to_dict() == b.to_dict()

    def test_invalid_reps(self):
        spec = (dcbm_from_degree(200, 3, 8.0, 20.0), dcbm_from_degree(200, 3, 8.0, 20.0))
        with pytest.raises(ValueError):
            power_experiment(spec, reps=0)


class TestRankAuc:
    def test_perfect_separation(self):
        assert rank_auc([3.0, 4.0], [1.0, 2.0]) == 1.0
        assert rank_auc([1.0, 2.0], [3.0, 4.0]) == 0.0

    def test_ties_count_half(self):
        assert rank_auc([1.0, 1.0], [1.0]) == 0.5

    def test_empty_group(self):
        with pytest.raises(DegenerateStatistic):
            rank_auc([], [1.0])


@pytest.mark.slow
class TestAcceptanceScale:
    def test_size_under_null(self):
        spec = (dcbm_from_degree(2000, 3, 8.0, 40.0), dcbm_from_degree(2000, 3, 8.0, 40.0))
        assert power_experiment(spec, reps=500, k=3, master_seed=1).power <= 0.05

    def test_power_under_alternative(self):
        spec = (dcbm_from_degree(2000, 3, 4.0, 30.0), dcbm_from_degree(2000, 3, 12.0, 30.0))
        assert power_experiment(spec, reps=200, k=3, master_seed=2).power >= 0.9

    def test_power_grows_with_degree(self):
        powers = []
        for lam in (10.0, 20.0, 40.0):
            spec = (dcbm_from_degree(2000, 3, 4.0, lam), dcbm_from_degree(2000, 3, 6.0, lam))
            powers.append(power_experiment(spec, reps=100, k=3, master_seed=3).power)
        assert powers[0] <= powers[1] + 0.05
        assert powers[1] <= powers[2] + 0.05
