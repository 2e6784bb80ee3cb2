"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: lcd.py
@DateTime: 2025-07-05
@Docs: LCD 偏好连接过程（允许自环与重边的多重图，再化简）
"""

from dataclasses import dataclass

import numpy as np

from app.graph.graph import Graph, MultiGraphDraft, simplify
from app.utils.logger import log_function_calls, logger
from app.utils.parallel import derive_rng
from app.utils.validators import ParamValidator
from config.app_config import AppConfig

_LCD_STREAM = 3


@dataclass(frozen=True)
class LcdParams:
    """LCD 参数

    Attributes:
        n: 最终节点数 t
        m: 每步新增的边数
        seed: 随机种子
    """

    n: int
    m: int
    seed: int = AppConfig.DEFAULT_SEED

    def __post_init__(self) -> None:
        ParamValidator.integer_at_least(self.n, 1, "n")
        ParamValidator.integer_at_least(self.m, 1, "m")


@dataclass(frozen=True)
class LcdSample:
    """原始多重图及其化简结果"""

    draft: MultiGraphDraft
    graph: Graph


@log_function_calls()
def gen_lcd(params: LcdParams) -> LcdSample:
    """顺序生成 LCD 多重图

    第 t 步新节点 v_t 依次连出 m 条边，每条边的终点按当前度数成比例选取，
    已放下的边（包括 v_t 自身不断增长的度数）立即计入。实现上维护一个端点表，
    每个节点出现的次数等于其度数：先把 v_t 作为本条边的起点放入表中，
    再从整张表中均匀取一个位置作为终点，于是 ℙ(终点=k) = d(k)/(2mt−1)，
    ℙ(终点=v_t) = (d(v_t)+1)/(2mt−1)。第一个节点因此带 m 个自环。

    多重图恰有 m·n 条边。
    """
    n, m = params.n, params.m
    rng = derive_rng(params.seed, _LCD_STREAM)
    uniforms = rng.random(n * m)

    ends: list[int] = []
    sources = np.empty(n * m, dtype=np.int64)
    targets = np.empty(n * m, dtype=np.int64)
    draw = 0
    for t in range(n):
        for _ in range(m):
            ends.append(t)
            size = len(ends)
            target = ends[min(int(uniforms[draw] * size), size - 1)]
            ends.append(target)
            sources[draw] = t
            targets[draw] = target
            draw += 1

    draft = MultiGraphDraft(n=n, edges=np.column_stack([sources, targets]))
    graph = simplify(draft)
    logger.debug(
        f"LCD 生成完成 | n: {n} | m: {m} | 多重边: {draft.edge_count} | 自环: {draft.self_loop_count} | 简单图边数: {graph.m}"
    )
    return LcdSample(draft=draft, graph=graph)
