"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: test_dynamics.py
@DateTime: 2025-07-14
@Docs: WPC 网络、快照序列与联署/清单文件读取
"""

import itertools
import math
import random
from fractions import Fraction

import numpy as np
import polars as pl
import pytest

from app.core.exceptions import EmptyRecordSet, GraphAnalyticsError, LabelMismatch
from app.dynamics import (
    Snapshot,
    SnapshotSeries,
    SponsorshipRecord,
    build_wpc_network,
    build_wpc_series,
    labels_for,
    series_stats,
    true_in_out_ratio,
    wpc_scores,
)
from app.generators.block_models import dcbm_from_degree, gen_dcbm
from app.graph.graph import NodeLabeling, build_graph
from app.handlers.file_handler import FileHandler
from app.stats.subgraph_stats import graph_stats


def brute_force_wpc(records, i, j):
    """逐对直接按定义计算 WPC_{i,j}"""
    numerator = denominator = Fraction(0)
    for record in records:
        if record.sponsor != j or not record.cosponsors:
            continue
        weight = Fraction(1, len(record.cosponsors))
        denominator += weight
        if i in record.cosponsors:
            numerator += weight
    return numerator / denominator if denominator else Fraction(0)


def random_records(rng: random.Random, senators: int, bills: int) -> list[SponsorshipRecord]:
    records = []
    for bill in range(bills):
        sponsor = rng.randrange(senators)
        others = [s for s in range(senators) if s != sponsor]
        cosponsors = rng.sample(others, rng.randint(0, min(6, len(others))))
        records.append(SponsorshipRecord(sponsor=sponsor, bill=bill, cosponsors=frozenset(cosponsors)))
    return records


@pytest.fixture
def example_records():
    return [
        SponsorshipRecord("j", "bill1", frozenset({"i", "x"})),
        SponsorshipRecord("j", "bill2", frozenset({"x"})),
    ]


class TestWpcScores:
    def test_hand_example(self, example_records):
        scores = wpc_scores(example_records)
        assert scores[("i", "j")] == pytest.approx(1 / 3)
        assert scores[("x", "j")] == 1.0
        assert ("j", "i") not in scores

    def test_full_cosponsor_scores_one(self):
        records = [SponsorshipRecord("j", b, frozenset({"i", "y"})) for b in range(3)]
        assert wpc_scores(records)[("i", "j")] == 1.0

    def test_bills_without_cosponsors_are_skipped(self, example_records):
        records = [*example_records, SponsorshipRecord("j", "bill3")]
        assert wpc_scores(records) == wpc_scores(example_records)

    def test_self_cosponsor_rejected(self):
        with pytest.raises(GraphAnalyticsError):
            SponsorshipRecord("j", "bill", frozenset({"j"}))

    def test_randomized_against_brute_force(self):
        rng = random.Random(3)
        for _ in range(30):
            senators = rng.randint(2, 20)
            records = random_records(rng, senators, rng.randint(1, 50))
            scores = wpc_scores(records)
            for i, j in itertools.permutations(range(senators), 2):
                expected = brute_force_wpc(records, i, j)
                assert 0 <= expected <= 1
                assert scores.get((i, j), 0.0) == float(expected)


class TestWpcNetwork:
    def test_threshold_and_rules(self, example_records):
        network = build_wpc_network(example_records, threshold=0.3)
        assert network.node_ids == ("i", "j", "x")
        assert network.graph.edges.tolist() == [[0, 1], [1, 2]]

        assert build_wpc_network(example_records, threshold=0.5).graph.edges.tolist() == [[1, 2]]
        assert build_wpc_network(example_records, threshold=0.3, rule="and").graph.m == 0

    def test_mutual_pair_under_and_rule(self):
        records = [SponsorshipRecord("a", 1, frozenset({"b"})), SponsorshipRecord("b", 2, frozenset({"a"}))]
        assert build_wpc_network(records, rule="and").graph.m == 1

    def test_matches_brute_force(self):
        rng = random.Random(8)
        for _ in range(20):
            senators = rng.randint(3, 20)
            records = random_records(rng, senators, rng.randint(1, 50))
            network = build_wpc_network(records, threshold=0.25)
            expected = set()
            for i, j in itertools.combinations(sorted(network.node_ids), 2):
                score = max(brute_force_wpc(records, i, j), brute_force_wpc(records, j, i))
                if score >= Fraction(1, 4):
                    expected.add((network.node_ids.index(i), network.node_ids.index(j)))
            assert {tuple(e) for e in network.graph.edges.tolist()} == expected

    def test_invariant_to_record_order(self):
        records = random_records(random.Random(1), 12, 40)
        shuffled = list(records)
        random.Random(2).shuffle(shuffled)
        assert build_wpc_network(records).graph == build_wpc_network(shuffled).graph

    def test_empty_records(self):
        with pytest.raises(EmptyRecordSet):
            build_wpc_network([])

    @pytest.mark.parametrize("threshold", [0.0, -0.1, 1.5])
    def test_invalid_threshold(self, example_records, threshold):
        with pytest.raises(ValueError):
            build_wpc_network(example_records, threshold=threshold)

    def test_party_labels(self, example_records):
        network = build_wpc_network(example_records)
        labels = labels_for(network, {"i": "R", "j": "D", "x": "D"})
        assert labels.labels.tolist() == [1, 0, 0]
        with pytest.raises(LabelMismatch):
            labels_for(network, {"i": "R"})

    def test_series_by_tag(self, example_records):
        series, networks = build_wpc_series({"2001": example_records, "2003": example_records[:1]})
        assert series.tags == ["2001", "2003"]
        assert networks["2003"].node_ids == ("i", "j", "x")


class TestSeries:
    def test_true_ratio(self, k4):
        assert true_in_out_ratio(k4, NodeLabeling.from_sequence([0, 0, 1, 1])) == 0.5

    def test_true_ratio_undefined(self, k4):
        assert true_in_out_ratio(k4, NodeLabeling.from_sequence([0, 0, 0, 0])) is None

    def test_true_ratio_concentrates_on_block_model(self):
        # 等大小的 3 个块: r · 块内点对数 / 块间点对数
        n, k, r = 600, 3, 10.0
        expected = r * (k * math.comb(n // k, 2)) / ((n**2 / 2) * (1 - 1 / k))
        ratios = []
        for seed in range(100):
            sample = gen_dcbm(dcbm_from_degree(n, k, r, 30.0, seed=seed))
            ratios.append(true_in_out_ratio(sample.graph, sample.labels))
        assert float(np.mean(ratios)) == pytest.approx(expected, rel=0.15)

    def test_label_length_checked(self, k4):
        with pytest.raises(LabelMismatch):
            true_in_out_ratio(k4, NodeLabeling.from_sequence([0, 1]))

    def test_rows_follow_input_order(self, k3, k4, star):
        series = SnapshotSeries.from_items(
            [
                ("b", k4, NodeLabeling.from_sequence([0, 0, 1, 1])),
                ("a", star, None),
                ("c", k3, None),
                ("tiny", build_graph([(0, 1)]), None),
            ]
        )
        table = series_stats(series)
        assert table["tag"].to_list() == ["b", "a", "c", "tiny"]
        assert table["rho_hat"].to_list()[:3] == [graph_stats(k4).rho_hat, 0.0, 1.0]
        assert table["cc_ratio"].to_list() == [3.0, 0.0, 3.0, None]
        assert table["true_in_out_ratio"].to_list() == [0.5, None, None, None]
        assert table.row(3, named=True)["rho_hat"] is None

    def test_worker_independent(self, k4, star):
        series = SnapshotSeries.from_items([(str(i), g, None) for i, g in enumerate([k4, star, k4])])
        assert series_stats(series, workers=1).equals(series_stats(series, workers=2))

    def test_duplicate_tags(self, k3):
        with pytest.raises(GraphAnalyticsError):
            SnapshotSeries(snapshots=(Snapshot("t", k3), Snapshot("t", k3)))


class TestFileReaders:
    def test_sponsorships(self, write_file):
        path = write_file(
            "bills.csv",
            "sponsor,bill,cosponsor,tag\nj,b1,i,s1\nj,b1,x,s1\nj,b2,x,s1\nj,b3,,s1\nj,b4,j,s1\nk,b1,j,s2\n",
        )
        records = FileHandler().read_sponsorships(path, by_tag=True)
        assert list(records) == ["s1", "s2"]
        by_bill = {r.bill: r.cosponsors for r in records["s1"]}
        assert by_bill == {"b1": frozenset({"i", "x"}), "b2": frozenset({"x"}), "b3": frozenset(), "b4": frozenset()}
        assert wpc_scores(records["s1"])[("i", "j")] == pytest.approx(1 / 3)

    def test_sponsorships_untagged(self, write_file):
        path = write_file("bills.csv", "sponsor,bill,cosponsor\na,1,b\n")
        assert list(FileHandler().read_sponsorships(path)) == ["all"]

    def test_manifest(self, write_file):
        write_file("g1.edges", "0 1\n1 2\n0 2\n2 3\n")
        write_file("g1.labels", "0 a\n1 a\n2 b\n3 b\n")
        write_file("g2.edges", "%n=3\n0 1\n")
        manifest = write_file("manifest.csv", "tag,edges,labels\nfirst,g1.edges,g1.labels\nsecond,g2.edges,\n")
        series = FileHandler().read_manifest(manifest)
        assert series.tags == ["first", "second"]
        assert series.snapshots[0].labels.labels.tolist() == [0, 0, 1, 1]
        assert series.snapshots[1].labels is None
        table = series_stats(series)
        assert table["true_in_out_ratio"].to_list() == [1.0, None]

    def test_table_reads_strings_without_schema(self, write_file):
        frame = FileHandler().read_table(write_file("t.csv", "tag,n\n007,3\nx,\n"))
        assert dict(frame.schema) == {"tag": pl.Utf8, "n": pl.Utf8}
        assert frame["tag"].to_list() == ["007", "x"]
        assert frame["n"].to_list() == ["3", None]

    def test_labels_must_cover_graph(self, write_file):
        handler = FileHandler()
        data = handler.read_edge_list(write_file("g.edges", "0 1\n1 2\n"))
        with pytest.raises(LabelMismatch):
            handler.read_labels(write_file("g.labels", "0 a\n1 b\n"), data)
        with pytest.raises(LabelMismatch):
            handler.read_labels(write_file("h.labels", "0 a\n1 b\n2 a\n9 b\n"), data)

    def test_symbolic_labels(self, write_file):
        handler = FileHandler()
        data = handler.read_edge_list(write_file("g.edges", "alice bob\nbob carol\n"))
        labels = handler.read_labels(write_file("g.labels", "carol 10\nalice 2\nbob 10\n"), data)
        assert data.symbols == ("alice", "bob", "carol")
        assert labels.labels.tolist() == [0, 1, 1]
        assert labels.k == 2
        assert np.array_equal(labels.labels, np.array([0, 1, 1]))
