"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: conftest.py
@DateTime: 2025-07-14
@Docs: 测试共用的夹具
"""

import itertools
from collections.abc import Callable
from pathlib import Path

import numpy as np
import pytest

from app.graph.graph import Graph, build_graph
from app.run import main


@pytest.fixture
def k3() -> Graph:
    return build_graph([(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def k4() -> Graph:
    return build_graph(list(itertools.combinations(range(4), 2)))


@pytest.fixture
def star() -> Graph:
    return build_graph([(0, i) for i in range(1, 6)])


@pytest.fixture
def random_graph() -> Callable[[np.random.Generator, int, float], Graph]:
    """每个节点对独立以概率 p 连边的小图（直接用 numpy，不经过生成器模块）"""

    def make(rng: np.random.Generator, n: int, p: float) -> Graph:
        pairs = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
        return build_graph(pairs, n=n)

    return make


@pytest.fixture
def write_file(tmp_path: Path) -> Callable[[str, str], Path]:
    def write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        return path

    return write


@pytest.fixture
def cli(capsys: pytest.CaptureFixture) -> Callable[..., tuple[int, str]]:
    """运行命令行，返回 (退出码, 标准输出)"""

    def run(*argv: str) -> tuple[int, str]:
        code = main([str(a) for a in argv])
        return code, capsys.readouterr().out

    return run
