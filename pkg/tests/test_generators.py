"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: test_generators.py
@DateTime: 2025-07-14
@Docs: ER / DCBM / LCD 生成器与 θ 分布
"""

import numpy as np
import pytest

from app.core.exceptions import InfeasibleParameters, InvalidDistribution
from app.generators.block_models import DcbmParams, ErParams, dcbm_from_degree, gen_dcbm, gen_er
from app.generators.lcd import LcdParams, gen_lcd
from app.generators.theta import ThetaLaw
from app.stats.subgraph_stats import graph_stats
from app.theory.closed_form import lcd_rho_asymptote, rho_of_r


class TestThetaLaw:
    def test_two_point_normalized_second_moment(self):
        theta = ThetaLaw.two_point((0.2, 1.0), (0.8, 0.2), normalize_second_moment=True)
        assert theta.second_moment() == pytest.approx(1.0)
        assert theta.mean() == pytest.approx(0.36 / np.sqrt(0.232))

    def test_literal_two_point_describes_its_moments(self):
        described = ThetaLaw.two_point((0.2, 1.0), (0.8, 0.2)).describe()
        assert described["normalize_second_moment"] is False
        assert described["mean"] == pytest.approx(0.36)
        assert described["second_moment"] == pytest.approx(0.232)

    def test_power_law_sample_respects_lower_bound(self):
        theta = ThetaLaw.power_law(4.2)
        draws = theta.sample(5000, np.random.default_rng(1))
        assert draws.min() >= theta.lower_bound * theta.scale
        assert theta.second_moment() == pytest.approx(1.0)

    def test_power_law_needs_finite_second_moment(self):
        with pytest.raises(InvalidDistribution):
            ThetaLaw.power_law(2.0)

    def test_two_point_probabilities_must_sum_to_one(self):
        with pytest.raises(InvalidDistribution):
            ThetaLaw.two_point((0.2, 1.0), (0.5, 0.4))


class TestErdosRenyi:
    def test_same_seed_same_graph(self):
        params = ErParams(n=300, p=0.05, seed=7)
        assert gen_er(params) == gen_er(params)

    def test_different_seed_different_graph(self):
        assert gen_er(ErParams(n=300, p=0.05, seed=7)) != gen_er(ErParams(n=300, p=0.05, seed=8))

    def test_independent_of_worker_count(self):
        params = ErParams(n=700, p=0.02, seed=3)
        assert gen_er(params, workers=1) == gen_er(params, workers=2)

    def test_extreme_probabilities(self):
        assert gen_er(ErParams(n=50, p=0.0)).m == 0
        assert gen_er(ErParams(n=50, p=1.0)).m == 50 * 49 // 2

    def test_edge_count_near_expectation(self):
        g = gen_er(ErParams(n=400, p=0.05, seed=11))
        expected = 0.05 * 400 * 399 / 2
        assert abs(g.m - expected) < 5 * np.sqrt(expected)

    def test_mean_degree_within_three_standard_errors(self):
        n, p, seeds = 200, 0.05, 200
        degrees = [gen_er(ErParams(n=n, p=p, seed=s)).average_degree for s in range(seeds)]
        # 平均度 2M/n，M ~ Bin(C(n,2), p)
        per_graph_var = 4 * (n * (n - 1) / 2) * p * (1 - p) / n**2
        assert abs(np.mean(degrees) - (n - 1) * p) <= 3 * np.sqrt(per_graph_var / seeds)

    def test_rho_close_to_one(self):
        values = [graph_stats(gen_er(ErParams(n=300, p=0.1, seed=s))).rho_hat for s in range(10)]
        assert 0.95 <= float(np.mean(values)) <= 1.05


class TestDcbm:
    def test_from_degree_uniform_case(self):
        params = dcbm_from_degree(200, 3, 1.0, 15.0)
        assert params.p == pytest.approx(15.0 / 199.0)
        assert params.q == pytest.approx(params.p)

    def test_from_degree_with_ratio(self):
        params = dcbm_from_degree(200, 3, 10.0, 15.0)
        assert params.p == pytest.approx(450.0 / (199.0 * 12.0))
        assert params.r == pytest.approx(10.0)

    def test_from_degree_infeasible(self):
        with pytest.raises(InfeasibleParameters):
            dcbm_from_degree(20, 3, 10.0, 50.0)
        with pytest.raises(InfeasibleParameters):
            dcbm_from_degree(200, 3, 0.5, 15.0)

    def test_params_validation(self):
        with pytest.raises(InvalidDistribution):
            DcbmParams(n=10, k=2, p=0.1, q=0.2)
        with pytest.raises(InvalidDistribution):
            DcbmParams(n=10, k=2, p=0.2, q=0.1, pi=(0.7, 0.7))

    def test_deterministic_and_worker_independent(self):
        params = dcbm_from_degree(600, 3, 10.0, 15.0, seed=5)
        a = gen_dcbm(params, workers=1)
        b = gen_dcbm(params, workers=2)
        assert a.graph == b.graph
        assert a.labels == b.labels
        assert a.clamp_count == 0

    def test_labels_cover_blocks(self):
        sample = gen_dcbm(dcbm_from_degree(300, 4, 5.0, 10.0, seed=2))
        assert sample.labels.n == 300
        assert sample.labels.k == 4
        assert set(sample.labels.labels.tolist()) == {0, 1, 2, 3}

    def test_clamped_probabilities_are_counted(self):
        sample = gen_dcbm(DcbmParams(n=30, k=2, p=1.0, q=0.5, theta=ThetaLaw.constant(2.0)))
        assert sample.clamp_count == 30 * 29 // 2
        assert sample.graph.m == 30 * 29 // 2

    def test_average_degree_matches_target(self):
        sample = gen_dcbm(dcbm_from_degree(900, 3, 10.0, 15.0, seed=4))
        assert sample.graph.average_degree == pytest.approx(15.0, rel=0.1)

    def test_block_density_ratio_matches_r(self):
        n, r = 2000, 10.0
        sample = gen_dcbm(dcbm_from_degree(n, 3, r, 50.0, seed=8))
        labels = sample.labels.labels
        edges = sample.graph.edges
        same = labels[edges[:, 0]] == labels[edges[:, 1]]
        sizes = np.bincount(labels, minlength=3)
        within_pairs = int(sum(s * (s - 1) // 2 for s in sizes))
        between_pairs = n * (n - 1) // 2 - within_pairs
        density_ratio = (np.count_nonzero(same) / within_pairs) / (np.count_nonzero(~same) / between_pairs)
        assert density_ratio == pytest.approx(r, rel=0.1)

    def test_rho_near_closed_form(self):
        values = [graph_stats(gen_dcbm(dcbm_from_degree(600, 3, 10.0, 30.0, seed=s)).graph).rho_hat for s in range(5)]
        assert float(np.mean(values)) == pytest.approx(rho_of_r(10.0, 3), rel=0.15)


class TestLcd:
    def test_multigraph_has_m_edges_per_node(self):
        sample = gen_lcd(LcdParams(n=500, m=3, seed=1))
        assert sample.draft.edge_count == 1500
        assert sample.graph.m <= 1500

    def test_first_node_starts_with_self_loops(self):
        draft = gen_lcd(LcdParams(n=20, m=4, seed=2)).draft
        assert draft.edges[:4].tolist() == [[0, 0]] * 4

    def test_deterministic(self):
        assert gen_lcd(LcdParams(n=300, m=2, seed=9)).graph == gen_lcd(LcdParams(n=300, m=2, seed=9)).graph

    def test_single_edge_per_step_has_no_triangles(self):
        for seed in range(5):
            stats = graph_stats(gen_lcd(LcdParams(n=400, m=1, seed=seed)).graph)
            assert stats.triangles == 0
            assert stats.rho_hat == 0.0

    def test_edges_point_to_earlier_or_same_node(self):
        edges = gen_lcd(LcdParams(n=200, m=2, seed=4)).draft.edges
        assert (edges[:, 1] <= edges[:, 0]).all()


@pytest.mark.slow
class TestAcceptanceScale:
    def test_er_limit(self):
        stats = [graph_stats(gen_er(ErParams(n=2000, p=0.05, seed=s))) for s in range(100)]
        assert 0.95 <= np.mean([s.rho_hat for s in stats]) <= 1.05
        assert 0.135 <= np.mean([s.cc_ratio for s in stats]) <= 0.165
        assert 0.045 <= np.mean([s.cc_hat for s in stats]) <= 0.055

    def test_dcbm_closed_form_and_separation(self):
        high, low = [], []
        for s in range(200):
            high.append(graph_stats(gen_dcbm(dcbm_from_degree(1000, 3, 10.0, 30.0, seed=s)).graph).rho_hat)
            low.append(graph_stats(gen_dcbm(dcbm_from_degree(1000, 3, 20.0 / 3.0, 30.0, seed=s)).graph).rho_hat)
        assert np.mean(high) == pytest.approx(1.84375, rel=0.1)
        assert np.mean(low) == pytest.approx(rho_of_r(20.0 / 3.0, 3), rel=0.1)
        assert np.mean(np.array(high) > np.array(low)) >= 0.95

    def test_lcd_ordering_and_asymptote(self):
        means = {}
        for m in (2, 3, 5):
            means[m] = np.mean([graph_stats(gen_lcd(LcdParams(n=100_000, m=m, seed=s)).graph).rho_hat for s in range(20)])
        assert means[2] < means[3] < means[5]
        for m, mean in means.items():
            assert lcd_rho_asymptote(m) / 2 <= mean <= 2 * lcd_rho_asymptote(m)

    def test_lcd_triangle_and_wedge_counts(self):
        n, m = 100_000, 3
        stats = [graph_stats(gen_lcd(LcdParams(n=n, m=m, seed=s)).graph) for s in range(5)]
        log_n = np.log(n)
        # 楔形数 W = V̂·3·C(N,3)，量级 m(m+1)N·logN/2
        wedge_ratio = np.mean([s.wedges for s in stats]) / (m * (m + 1) * n * log_n / 2)
        assert 0.5 <= wedge_ratio <= 2.0
        # 三角形数量级 m(m−1)(m+1)(logN)³/48，收敛很慢，只检查数量级
        triangle_ratio = np.mean([s.triangles for s in stats]) / (m * (m - 1) * (m + 1) * log_n**3 / 48)
        assert 0.2 <= triangle_ratio <= 5.0
