"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: test_subgraph_stats.py
@DateTime: 2025-07-14
@Docs: 子图计数与 ρ̂ 的精确性
"""

import itertools
import math

import numpy as np
import pytest

from app.core.exceptions import DegenerateGraph, RhoUndefined
from app.graph.graph import build_graph
from app.stats.subgraph_stats import (
    SubgraphCounts,
    count_subgraphs,
    count_triangles,
    graph_stats,
    rho_matrix_form,
    stats_from_counts,
)
from config.model_config import ModelConfig


def brute_force_counts(g) -> SubgraphCounts:
    """逐个三元组枚举: 两条边的三元组贡献 1 个楔形，三条边贡献 3 个楔形和 1 个三角形"""
    adjacency = {tuple(e) for e in g.edges.tolist()}
    wedges = triangles = 0
    for a, b, c in itertools.combinations(range(g.n), 3):
        present = ((a, b) in adjacency) + ((a, c) in adjacency) + ((b, c) in adjacency)
        if present == 2:
            wedges += 1
        elif present == 3:
            wedges += 3
            triangles += 1
    return SubgraphCounts(m_edges=len(adjacency), wedges=wedges, triangles=triangles)


def dense_rho(g) -> float:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges.tolist():
        a[u, v] = a[v, u] = 1.0
    a2 = a @ a
    n = g.n
    wedge_term = a2.sum() - np.trace(a2)
    return (n - 2) ** 2 * np.trace(a2 @ a) * a.sum() ** 3 / (n * (n - 1) * wedge_term**3)


class TestExactCounts:
    def test_k4(self, k4):
        counts = count_subgraphs(k4)
        assert (counts.m_edges, counts.wedges, counts.triangles) == (6, 12, 4)

    def test_k3_has_rho_one(self, k3):
        stats = graph_stats(k3)
        assert stats.rho_hat == pytest.approx(1.0, rel=1e-15)
        assert stats.cc_hat == 1.0
        assert stats.cc_ratio == 3.0

    def test_star_has_no_triangles(self, star):
        stats = graph_stats(star)
        assert stats.triangles == 0
        assert stats.wedges == 10
        assert stats.rho_hat == 0.0

    def test_matches_exhaustive_enumeration(self, random_graph):
        rng = np.random.default_rng(20190601)
        for _ in range(1000):
            n = int(rng.integers(3, 13))
            g = random_graph(rng, n, float(rng.uniform(0.1, 0.9)))
            expected = brute_force_counts(g)
            assert count_subgraphs(g) == expected
            stats = stats_from_counts(g.n, expected)
            if expected.wedges:
                assert rho_matrix_form(g) == pytest.approx(stats.rho_hat, rel=1e-12)

    def test_matrix_form_against_dense_adjacency(self, random_graph):
        g = random_graph(np.random.default_rng(3), 25, 0.3)
        assert rho_matrix_form(g) == pytest.approx(dense_rho(g), rel=1e-10)

    @pytest.mark.parametrize("method", ["hash", "merge"])
    def test_kernels_agree(self, random_graph, method):
        g = random_graph(np.random.default_rng(8), 80, 0.15)
        assert count_triangles(g, method=method) == brute_force_counts(g).triangles

    @pytest.mark.parametrize("method", ["hash", "merge"])
    def test_worker_count_does_not_change_result(self, random_graph, monkeypatch, method):
        monkeypatch.setattr(ModelConfig, "TRIANGLE_CHUNK_NODES", 16)
        g = random_graph(np.random.default_rng(9), 120, 0.1)
        expected = brute_force_counts(g).triangles
        assert count_triangles(g, workers=1, method=method) == expected
        assert count_triangles(g, workers=2, method=method) == expected

    def test_unknown_method(self, k4):
        with pytest.raises(ValueError):
            count_triangles(k4, method="bitset")


class TestStatistics:
    def test_undefined_without_wedges(self):
        g = build_graph([(0, 1), (2, 3)], n=5)
        stats = graph_stats(g)
        assert stats.rho_hat is None
        assert stats.cc_hat is None
        assert not stats.rho_defined
        assert stats.to_dict()["rho_hat"] is None

    def test_empty_graph_is_undefined(self):
        stats = graph_stats(build_graph([], n=5))
        assert stats.edges == 0
        assert stats.rho_hat is None

    def test_too_small_graph(self):
        with pytest.raises(DegenerateGraph):
            graph_stats(build_graph([(0, 1)]))

    def test_matrix_form_needs_wedges(self):
        with pytest.raises(RhoUndefined):
            rho_matrix_form(build_graph([(0, 1)], n=4))

    def test_plug_in_estimates(self, k4):
        stats = graph_stats(k4)
        assert stats.e_hat == 1.0
        assert stats.v_hat == 1.0
        assert stats.t_hat == 1.0
        assert stats.rho_hat == 1.0

    def test_rho_of_two_disjoint_k4_matches_count_formula(self, k4):
        # 两份不相交的 K4: Δ=8, M=12, W=24, n=8，代入 27ΔM³C(n,3)²/(C(n,2)³W³)
        g = build_graph([(u + 4 * c, v + 4 * c) for c in range(2) for u, v in k4.edges.tolist()])
        stats = graph_stats(g)
        n = 8
        expected = 27 * 8 * 12**3 * math.comb(n, 3) ** 2 / (math.comb(n, 2) ** 3 * 24**3)
        assert stats.rho_hat == pytest.approx(expected, rel=1e-12)
