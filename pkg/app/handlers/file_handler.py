"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: file_handler.py
@DateTime: 2025-07-12
@Docs: 文件处理器: 边列表、标签文件、快照清单与联署记录的读写
"""

import os
import re
from collections.abc import Hashable
from dataclasses import dataclass
from pathlib import Path
from typing import Literal

import numpy as np
import polars as pl

from app.core.exceptions import EdgeListParseError, GraphAnalyticsError, LabelMismatch
from app.dynamics.series import SnapshotSeries
from app.dynamics.wpc import SponsorshipRecord
from app.graph.graph import Graph, NodeLabeling, build_graph
from app.utils.logger import log_function_calls, logger
from config.file_config import FileConfig

IdMode = Literal["auto", "integer", "symbol"]

_INTEGER = re.compile(r"^\d+$")


@dataclass(frozen=True)
class EdgeListData:
    """读入的边列表

    Attributes:
        graph: 构建好的图
        symbols: 符号模式下节点编号 i 对应的原始 id；整数模式为 None
        declared_n: ``%n=`` 指令给出的节点数
    """

    graph: Graph
    symbols: tuple[str, ...] | None = None
    declared_n: int | None = None

    def node_index(self) -> dict[str, int] | None:
        if self.symbols is None:
            return None
        return {symbol: i for i, symbol in enumerate(self.symbols)}


def _label_codes(tokens: list[str]) -> dict[str, int]:
    """标签字母表编号: 全为整数时按数值排序，否则按字符串排序"""
    distinct = set(tokens)
    if all(_INTEGER.match(t) for t in distinct):
        ordered = sorted(distinct, key=int)
    else:
        ordered = sorted(distinct)
    return {token: i for i, token in enumerate(ordered)}


class FileHandler:
    """文件处理器

    提供边列表、标签、清单与联署记录的读取，以及边列表的写出
    """

    def __init__(self, max_size: int = FileConfig.MAX_FILE_SIZE):
        """初始化文件处理器

        Args:
            max_size: 最大文件大小限制
        """
        self.max_size = max_size
        logger.debug(f"文件处理器初始化完成 | 大小上限: {max_size / 1024 / 1024:.0f} MB")

    def check_file(self, path: str | Path) -> Path:
        """检查文件存在且不超过大小限制

        Raises:
            EdgeListParseError: 文件不存在或过大
        """
        path = Path(path)
        if not path.is_file():
            raise EdgeListParseError("file not found", path=str(path))
        size = os.path.getsize(path)
        if size > self.max_size:
            raise EdgeListParseError(f"file size {size} exceeds the limit {self.max_size}", path=str(path))
        return path

    def _iter_lines(self, path: Path):
        with path.open("r", encoding=FileConfig.ENCODING) as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.strip()
                if not line or line.startswith(FileConfig.COMMENT_PREFIX):
                    continue
                yield lineno, line

    @log_function_calls(include_args=True)
    def read_edge_list(self, path: str | Path, id_mode: IdMode = "auto") -> EdgeListData:
        """读取边列表文件

        每行一条边，两个空白分隔的 id；以 ``#`` 开头的行被忽略；``%n=<count>`` 指定节点数。
        ``auto`` 模式下所有 id 都是非负整数时直接作为节点编号，否则按首次出现顺序映射为稠密编号。

        Args:
            path: 文件路径
            id_mode: ``auto`` / ``integer`` / ``symbol``

        Returns:
            边列表数据

        Raises:
            EdgeListParseError: 文件错误，消息带路径与行号
        """
        path = self.check_file(path)
        declared_n: int | None = None
        tokens: list[tuple[str, str]] = []
        lines: list[int] = []
        for lineno, line in self._iter_lines(path):
            if line.startswith(FileConfig.NODE_COUNT_DIRECTIVE):
                value = line[len(FileConfig.NODE_COUNT_DIRECTIVE) :].strip()
                if not _INTEGER.match(value):
                    raise EdgeListParseError(f"invalid node count directive {line!r}", path=str(path), line=lineno)
                declared_n = int(value)
                continue
            parts = line.split()
            if len(parts) != 2:
                raise EdgeListParseError(f"expected two node ids, got {len(parts)} tokens", path=str(path), line=lineno)
            tokens.append((parts[0], parts[1]))
            lines.append(lineno)

        all_integer = all(_INTEGER.match(a) and _INTEGER.match(b) for a, b in tokens)
        if id_mode == "integer" and not all_integer:
            bad = next(i for i, (a, b) in enumerate(tokens) if not (_INTEGER.match(a) and _INTEGER.match(b)))
            raise EdgeListParseError("node ids must be nonnegative integers", path=str(path), line=lines[bad])

        symbols: tuple[str, ...] | None = None
        if id_mode == "symbol" or (id_mode == "auto" and not all_integer):
            table: dict[str, int] = {}
            for a, b in tokens:
                table.setdefault(a, len(table))
                table.setdefault(b, len(table))
            pairs = np.array([(table[a], table[b]) for a, b in tokens], dtype=np.int64).reshape(-1, 2)
            symbols = tuple(table)
        else:
            pairs = np.array([(int(a), int(b)) for a, b in tokens], dtype=np.int64).reshape(-1, 2)

        try:
            graph = build_graph(pairs, n=declared_n)
        except GraphAnalyticsError as e:
            raise EdgeListParseError(str(e), path=str(path)) from e
        logger.info(f"边列表读取完成: {path} | 节点数: {graph.n} | 边数: {graph.m} | 符号映射: {symbols is not None}")
        return EdgeListData(graph=graph, symbols=symbols, declared_n=declared_n)

    def read_label_pairs(self, path: str | Path) -> dict[str, str]:
        """读取 ``node label`` 两列文件为字符串映射"""
        path = self.check_file(path)
        mapping: dict[str, str] = {}
        for lineno, line in self._iter_lines(path):
            parts = line.split()
            if len(parts) != 2:
                raise EdgeListParseError(f"expected 'node label', got {len(parts)} tokens", path=str(path), line=lineno)
            if parts[0] in mapping and mapping[parts[0]] != parts[1]:
                raise EdgeListParseError(f"node {parts[0]!r} has conflicting labels", path=str(path), line=lineno)
            mapping[parts[0]] = parts[1]
        return mapping

    @log_function_calls(include_args=True)
    def read_labels(self, path: str | Path, data: EdgeListData) -> NodeLabeling:
        """读取节点标签文件，节点 id 与边列表使用同一套编号

        Raises:
            LabelMismatch: 有节点缺少标签，或标签文件引用了图中不存在的节点
        """
        mapping = self.read_label_pairs(path)
        index = data.node_index()
        codes = _label_codes(list(mapping.values()))
        labels = np.full(data.graph.n, -1, dtype=np.int64)
        for node, label in mapping.items():
            if index is not None:
                if node not in index:
                    raise LabelMismatch(f"{path}: node {node!r} does not appear in the graph")
                v = index[node]
            else:
                if not _INTEGER.match(node) or int(node) >= data.graph.n:
                    raise LabelMismatch(f"{path}: node id {node!r} is outside [0, {data.graph.n})")
                v = int(node)
            labels[v] = codes[label]
        missing = int(np.count_nonzero(labels < 0))
        if missing:
            raise LabelMismatch(f"{path}: {missing} of {data.graph.n} nodes have no label")
        return NodeLabeling(labels=labels, k=len(codes))

    @log_function_calls(include_args=True)
    def read_manifest(self, path: str | Path) -> SnapshotSeries:
        """读取快照清单 CSV（tag, edges[, labels]），相对路径以清单所在目录为基准"""
        path = self.check_file(path)
        frame = self.read_table(path)
        tag_col, edges_col, labels_col = FileConfig.MANIFEST_COLUMNS
        missing = [c for c in (tag_col, edges_col) if c not in frame.columns]
        if missing:
            raise EdgeListParseError(f"manifest is missing columns {missing}", path=str(path))

        base = path.parent
        snapshots = []
        for row in frame.iter_rows(named=True):
            data = self.read_edge_list(base / row[edges_col])
            labels = None
            if labels_col in frame.columns and row[labels_col]:
                labels = self.read_labels(base / row[labels_col], data)
            snapshots.append((row[tag_col], data.graph, labels))
        logger.info(f"快照清单读取完成: {path} | 快照数: {len(snapshots)}")
        return SnapshotSeries.from_items(snapshots)

    @log_function_calls(include_args=True)
    def read_sponsorships(self, path: str | Path, by_tag: bool = False) -> dict[str, list[SponsorshipRecord]]:
        """读取联署记录 CSV（sponsor, bill, cosponsor[, tag]），每行一个 (议案, 联署人)

        cosponsor 为空的行表示没有联署人的议案。by_tag 为假时所有记录归入标签 ``all``。

        Returns:
            标签 → 记录，标签按首次出现顺序排列
        """
        path = self.check_file(path)
        frame = self.read_table(path)
        required = list(FileConfig.SPONSORSHIP_COLUMNS)
        if by_tag:
            required.append(FileConfig.SPONSORSHIP_TAG_COLUMN)
        missing = [c for c in required if c not in frame.columns]
        if missing:
            raise EdgeListParseError(f"sponsorship file is missing columns {missing}", path=str(path))

        sponsor_col, bill_col, cosponsor_col = FileConfig.SPONSORSHIP_COLUMNS
        grouped: dict[str, dict[tuple[Hashable, Hashable], set]] = {}
        for lineno, row in enumerate(frame.iter_rows(named=True), start=2):
            sponsor, bill, cosponsor = row[sponsor_col], row[bill_col], row[cosponsor_col]
            if not sponsor or not bill:
                raise EdgeListParseError("sponsor and bill must not be empty", path=str(path), line=lineno)
            tag = str(row[FileConfig.SPONSORSHIP_TAG_COLUMN]) if by_tag else "all"
            cosponsors = grouped.setdefault(tag, {}).setdefault((sponsor, bill), set())
            if cosponsor:
                if cosponsor == sponsor:
                    logger.warning(f"忽略提案人联署自己的议案 | 文件: {path} | 行: {lineno}")
                    continue
                cosponsors.add(cosponsor)

        records = {
            tag: [SponsorshipRecord(sponsor=s, bill=b, cosponsors=frozenset(c)) for (s, b), c in bills.items()]
            for tag, bills in grouped.items()
        }
        logger.info(f"联署记录读取完成: {path} | 标签数: {len(records)} | 议案数: {sum(len(r) for r in records.values())}")
        return records

    def read_table(self, path: str | Path, schema: dict[str, pl.DataType] | None = None) -> pl.DataFrame:
        """读取 CSV 表（清单、联署记录或命令输出），未给 schema 时所有列按字符串读取"""
        path = self.check_file(path)
        if schema is None:
            return pl.read_csv(path, infer_schema_length=0)
        return pl.read_csv(path, schema=schema)

    @staticmethod
    def format_edge_list(g: Graph, header: list[str] | None = None) -> str:
        """边列表文本: 注释头、``%n=`` 指令与按字典序排列的边"""
        lines = [f"{FileConfig.COMMENT_PREFIX} {h}" for h in header or []]
        lines.append(f"{FileConfig.NODE_COUNT_DIRECTIVE}{g.n}")
        lines.extend(f"{u} {v}" for u, v in g.edges.tolist())
        return "\n".join(lines) + "\n"

    @staticmethod
    def format_labels(labels: NodeLabeling, node_ids: tuple | None = None) -> str:
        ids = node_ids if node_ids is not None else range(labels.n)
        return "".join(f"{node} {label}\n" for node, label in zip(ids, labels.labels.tolist(), strict=True))

    @log_function_calls(include_args=True)
    def write_text(self, path: str | Path, text: str) -> Path:
        """写出文本文件，必要时创建目录"""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding=FileConfig.ENCODING)
        logger.debug(f"文件写出完成: {path} | 大小: {len(text)} 字符")
        return path
