"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: test_graph.py
@DateTime: 2025-07-14
@Docs: 图表示与构建
"""

import numpy as np
import pytest

from app.core.exceptions import GraphAnalyticsError, InvalidNodeError, LabelMismatch
from app.graph.graph import MultiGraphDraft, NodeLabeling, build_graph, ego_network, induced_subgraph, simplify


class TestBuildGraph:
    def test_drops_self_loops_and_duplicates(self):
        g = build_graph([(0, 1), (1, 0), (1, 1), (1, 2), (1, 2)])
        assert g.n == 3
        assert g.m == 2
        assert g.build_report.self_loops_dropped == 1
        assert g.build_report.duplicates_dropped == 2
        assert g.edges.tolist() == [[0, 1], [1, 2]]

    def test_independent_of_edge_order(self):
        edges = [(0, 3), (2, 1), (3, 2), (4, 0), (1, 4)]
        rng = np.random.default_rng(5)
        shuffled = [edges[i] for i in rng.permutation(len(edges))]
        flipped = [(v, u) for u, v in shuffled]
        assert build_graph(edges) == build_graph(shuffled) == build_graph(flipped)

    def test_explicit_node_count_keeps_isolated_nodes(self):
        g = build_graph([(0, 1)], n=5)
        assert g.n == 5
        assert g.degrees.tolist() == [1, 1, 0, 0, 0]

    def test_explicit_node_count_too_small(self):
        with pytest.raises(InvalidNodeError):
            build_graph([(0, 7)], n=3)

    def test_strict_policy_rejects_loops(self):
        with pytest.raises(GraphAnalyticsError):
            build_graph([(0, 0), (0, 1)], dedup_policy="strict")

    @pytest.mark.parametrize("edges", [[(0, 1, 2)], [(-1, 2)], [("a", "b")]])
    def test_malformed_edges(self, edges):
        with pytest.raises(GraphAnalyticsError):
            build_graph(edges)

    def test_empty_graph(self):
        g = build_graph([], n=4)
        assert g.m == 0
        assert g.edges.shape == (0, 2)
        assert g.average_degree == 0.0

    def test_degree_sum_and_adjacency_symmetry(self, random_graph):
        g = random_graph(np.random.default_rng(11), 30, 0.2)
        assert int(g.degrees.sum()) == 2 * g.m
        for u, v in g.edges.tolist():
            assert u < v
            assert v in g.neighbors(u) and u in g.neighbors(v)
        assert all(np.all(np.diff(g.neighbors(v)) > 0) for v in range(g.n))

    def test_graph_is_read_only(self, k4):
        with pytest.raises(ValueError):
            k4.indices[0] = 3


class TestSubgraphs:
    def test_induced_subgraph_relabels_in_order(self, k4):
        sub = induced_subgraph(k4, [3, 0, 2])
        assert sub.mapping.tolist() == [0, 2, 3]
        assert sub.graph.n == 3
        assert sub.graph.m == 3

    def test_induced_subgraph_rejects_bad_ids(self, k4):
        with pytest.raises(InvalidNodeError):
            induced_subgraph(k4, [0, 4])

    def test_ego_network_of_star_center(self, star):
        ego = ego_network(star, 0)
        assert ego.n == 6
        assert ego.m == 5

    def test_ego_network_of_leaf(self, star):
        ego = ego_network(star, 3)
        assert ego.n == 2
        assert ego.m == 1

    def test_simplify_multigraph(self):
        draft = MultiGraphDraft(n=3, edges=np.array([[0, 0], [0, 1], [1, 0], [1, 2]]))
        assert draft.edge_count == 4
        assert draft.self_loop_count == 1
        assert simplify(draft).edges.tolist() == [[0, 1], [1, 2]]


class TestNodeLabeling:
    def test_from_sequence_infers_alphabet(self):
        labels = NodeLabeling.from_sequence([0, 2, 1, 2])
        assert labels.k == 3
        assert labels.n == 4

    def test_values_outside_alphabet(self):
        with pytest.raises(LabelMismatch):
            NodeLabeling.from_sequence([0, 3], k=2)

    def test_check_covers(self, k4):
        with pytest.raises(LabelMismatch):
            NodeLabeling.from_sequence([0, 1, 0]).check_covers(k4)
