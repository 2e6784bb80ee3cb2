"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: wpc.py
@DateTime: 2025-07-10
@Docs: 联署记录构建加权联署倾向（WPC）网络
"""

from collections import defaultdict
from collections.abc import Hashable, Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

import numpy as np

from app.core.exceptions import EmptyRecordSet, GraphAnalyticsError, LabelMismatch
from app.dynamics.series import SnapshotSeries
from app.graph.graph import Graph, NodeLabeling, build_graph
from app.utils.logger import log_function_calls, logger
from app.utils.validators import ParamValidator
from config.model_config import ModelConfig

SymmetrizeRule = Literal["or", "and"]


@dataclass(frozen=True)
class SponsorshipRecord:
    """一项议案: 提案人 j、议案 k 与联署人集合"""

    sponsor: Hashable
    bill: Hashable
    cosponsors: frozenset = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "cosponsors", frozenset(self.cosponsors))
        if self.sponsor in self.cosponsors:
            raise GraphAnalyticsError(f"sponsor {self.sponsor!r} cannot cosponsor its own bill {self.bill!r}")


@dataclass(frozen=True)
class WpcNetwork:
    """WPC 网络及节点编号到原始 id 的映射"""

    graph: Graph
    node_ids: tuple


def _sort_key(node_id: Hashable) -> tuple[str, object]:
    # 同类型的 id 之间按值排序，不同类型按类型名分组
    return type(node_id).__name__, node_id


def _merge_bills(records: Iterable[SponsorshipRecord]) -> dict[tuple[Hashable, Hashable], frozenset]:
    bills: dict[tuple[Hashable, Hashable], set] = defaultdict(set)
    for record in records:
        bills[(record.sponsor, record.bill)].update(record.cosponsors)
    return {key: frozenset(value) for key, value in bills.items()}


def wpc_scores(records: Iterable[SponsorshipRecord]) -> dict[tuple[Hashable, Hashable], float]:
    """有向 WPC 得分

    WPC_{i,j} = (Σ_k Y_{ij(k)}/c_{j(k)}) / (Σ_k 1/c_{j(k)})，k 遍历提案人 j 的议案，
    c_{j(k)} 为议案 k 的联署人数，Y_{ij(k)} 表示 i 是否联署。没有联署人的议案被跳过。
    以精确有理数累加，结果与记录顺序无关。

    Returns:
        (i, j) → WPC_{i,j}，只包含得分大于 0 的有序对
    """
    bills = _merge_bills(records)
    denominators: dict[Hashable, Fraction] = defaultdict(Fraction)
    numerators: dict[tuple[Hashable, Hashable], Fraction] = defaultdict(Fraction)
    skipped = 0
    for (sponsor, _bill), cosponsors in bills.items():
        if not cosponsors:
            skipped += 1
            continue
        weight = Fraction(1, len(cosponsors))
        denominators[sponsor] += weight
        for cosponsor in cosponsors:
            numerators[(cosponsor, sponsor)] += weight
    if skipped:
        logger.warning(f"跳过没有联署人的议案 | 数量: {skipped}")
    return {(i, j): float(value / denominators[j]) for (i, j), value in numerators.items()}


@log_function_calls()
def build_wpc_network(
    records: Iterable[SponsorshipRecord],
    threshold: float = ModelConfig.WPC_THRESHOLD,
    rule: SymmetrizeRule = "or",
) -> WpcNetwork:
    """构建无向无权的 WPC 网络

    节点为在任一记录中出现过的所有 id（按 id 升序编号）；
    ``or`` 规则下 max(WPC_{i,j}, WPC_{j,i}) ≥ threshold 时连边，``and`` 规则要求两个方向都达到阈值。

    Raises:
        EmptyRecordSet: 没有任何记录
    """
    records = list(records)
    if not records:
        raise EmptyRecordSet("sponsorship record set is empty")
    threshold = ParamValidator.probability(threshold, "threshold")
    if threshold <= 0:
        raise ValueError("threshold must lie in (0, 1]")
    if rule not in ("or", "and"):
        raise ValueError(f"unknown symmetrization rule {rule!r}")

    ids = {r.sponsor for r in records} | {c for r in records for c in r.cosponsors}
    node_ids = tuple(sorted(ids, key=_sort_key))
    index = {node_id: i for i, node_id in enumerate(node_ids)}

    scores = wpc_scores(records)
    edges = []
    for (i, j), forward in scores.items():
        backward = scores.get((j, i), 0.0)
        keep = max(forward, backward) >= threshold if rule == "or" else min(forward, backward) >= threshold
        if keep:
            edges.append((index[i], index[j]))

    pairs = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    # 两个方向各产生一次同一条边，合并属于预期，不记入告警
    pairs = np.unique(np.sort(pairs, axis=1), axis=0) if len(pairs) else pairs
    graph = build_graph(pairs, n=len(node_ids))
    logger.info(f"WPC 网络构建完成 | 节点: {graph.n} | 边: {graph.m} | 阈值: {threshold} | 规则: {rule}")
    return WpcNetwork(graph=graph, node_ids=node_ids)


def labels_for(network: WpcNetwork, party_of: Mapping[Hashable, Hashable]) -> NodeLabeling:
    """把 id → 党派 的映射转为节点标签，党派按排序后的顺序编号

    Raises:
        LabelMismatch: 有节点缺少党派
    """
    missing = [node_id for node_id in network.node_ids if node_id not in party_of]
    if missing:
        raise LabelMismatch(f"{len(missing)} nodes have no label, e.g. {missing[:3]}")
    alphabet = sorted({party_of[node_id] for node_id in network.node_ids}, key=_sort_key)
    code = {label: i for i, label in enumerate(alphabet)}
    return NodeLabeling.from_sequence([code[party_of[node_id]] for node_id in network.node_ids], k=len(alphabet))


@log_function_calls()
def build_wpc_series(
    records_by_tag: Mapping[str, list[SponsorshipRecord]],
    threshold: float = ModelConfig.WPC_THRESHOLD,
    rule: SymmetrizeRule = "or",
    party_of: Mapping[Hashable, Hashable] | None = None,
) -> tuple[SnapshotSeries, dict[str, WpcNetwork]]:
    """每个标签构建一个 WPC 网络，按映射的插入顺序组成快照序列

    Args:
        records_by_tag: 标签 → 记录
        threshold: WPC 阈值
        rule: 对称化规则
        party_of: 可选的 id → 党派，用于计算真实 in-out-ratio

    Returns:
        快照序列与各标签的网络
    """
    networks: dict[str, WpcNetwork] = {}
    snapshots = []
    for tag, records in records_by_tag.items():
        network = build_wpc_network(records, threshold=threshold, rule=rule)
        labels = labels_for(network, party_of) if party_of is not None else None
        networks[str(tag)] = network
        snapshots.append((tag, network.graph, labels))
    return SnapshotSeries.from_items(snapshots), networks
