"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: samplers.py
@DateTime: 2025-07-08
@Docs: 七种子网络采样算法（NS/ES/RWS/RWFS/RWJS/FF/SS）
"""

from collections import deque

import numpy as np

from app.base.base_sampler import BaseSampler
from app.graph.graph import Graph, InducedSubgraph
from app.sampling.sample_spec import SampleSpec
from app.utils.logger import logger


class _Visited:
    """已访问节点集合，保持加入顺序"""

    def __init__(self, n: int):
        self.mask = np.zeros(n, dtype=bool)
        self.order: list[int] = []

    def __len__(self) -> int:
        return len(self.order)

    def add(self, v: int) -> bool:
        if self.mask[v]:
            return False
        self.mask[v] = True
        self.order.append(int(v))
        return True

    def random_unvisited(self, rng: np.random.Generator) -> int:
        candidates = np.flatnonzero(~self.mask)
        return int(candidates[rng.integers(candidates.size)])

    def unvisited(self, nodes: np.ndarray) -> np.ndarray:
        return nodes[~self.mask[nodes]]

    def fill_uniform(self, size: int, rng: np.random.Generator) -> None:
        """用均匀随机的未访问节点补足到 size"""
        missing = size - len(self)
        if missing > 0:
            candidates = np.flatnonzero(~self.mask)
            for v in rng.choice(candidates, size=missing, replace=False):
                self.add(int(v))


class NodeSampler(BaseSampler):
    """NS: 均匀无放回地选 s 个节点"""

    method = "NS"

    def select_nodes(self, g: Graph, size: int, spec: SampleSpec, rng: np.random.Generator) -> np.ndarray:
        return rng.choice(g.n, size=size, replace=False)

    def get_description(self) -> str:
        return "节点采样: 均匀随机选择节点集合后取诱导子图"


class EdgeSampler(BaseSampler):
    """ES: 均匀无放回地选边，直到端点集合达到 s

    若下一条边会使端点数超过 s 则停止，因此 |V_s| ∈ {s−1, s}；边用尽时用均匀随机节点补足。
    """

    method = "ES"

    def select_nodes(self, g: Graph, size: int, spec: SampleSpec, rng: np.random.Generator) -> np.ndarray:
        visited = _Visited(g.n)
        edges = g.edges
        overflow = False
        for idx in rng.permutation(g.m):
            u, v = int(edges[idx, 0]), int(edges[idx, 1])
            new = int(not visited.mask[u]) + int(not visited.mask[v])
            if len(visited) + new > size:
                overflow = True
                break
            visited.add(u)
            visited.add(v)
            if len(visited) == size:
                break
        # s = 1 时第一条边就会溢出，同样用均匀节点补足
        if len(visited) < size and (not overflow or len(visited) == 0):
            logger.debug(f"边采样: 均匀补足 {size - len(visited)} 个节点")
            visited.fill_uniform(size, rng)
        return np.asarray(visited.order, dtype=np.int64)

    def get_description(self) -> str:
        return "边采样: 均匀随机选择边，取端点集合上的诱导子图"


class RandomWalkSampler(BaseSampler):
    """RWS: 从均匀随机起点出发的简单随机游走

    连续 max_stall_steps 步没有访问到新节点、或走到孤立节点时，
    在均匀随机的未访问节点处重启。
    """

    method = "RWS"

    def _move(self, g: Graph, current: int, start: int, spec: SampleSpec, rng: np.random.Generator) -> int:
        nbrs = g.indices[g.indptr[current] : g.indptr[current + 1]]
        return int(nbrs[rng.integers(nbrs.size)])

    def select_nodes(self, g: Graph, size: int, spec: SampleSpec, rng: np.random.Generator) -> np.ndarray:
        visited = _Visited(g.n)
        degrees = g.degrees
        stall_limit = spec.stall_limit(size)

        start = int(rng.integers(g.n))
        visited.add(start)
        current, stall, restarts = start, 0, 0
        while len(visited) < size:
            if stall >= stall_limit or degrees[current] == 0:
                start = visited.random_unvisited(rng)
                visited.add(start)
                current, stall = start, 0
                restarts += 1
                continue
            current = self._move(g, current, start, spec, rng)
            stall = 0 if visited.add(current) else stall + 1

        if restarts:
            logger.debug(f"随机游走重启 | 方法: {self.method} | 次数: {restarts}")
        return np.asarray(visited.order, dtype=np.int64)

    def get_description(self) -> str:
        return "随机游走采样: 收集游走访问到的不同节点"


class FlyBackWalkSampler(RandomWalkSampler):
    """RWFS: 每步以 flyback_p 的概率飞回起点"""

    method = "RWFS"

    def _move(self, g: Graph, current: int, start: int, spec: SampleSpec, rng: np.random.Generator) -> int:
        if rng.random() < spec.flyback_p:
            return start
        return super()._move(g, current, start, spec, rng)

    def get_description(self) -> str:
        return "带回飞的随机游走采样: 每步以固定概率回到起点"


class JumpWalkSampler(RandomWalkSampler):
    """RWJS: 每步以 jump_p 的概率跳到全图均匀随机节点"""

    method = "RWJS"

    def _move(self, g: Graph, current: int, start: int, spec: SampleSpec, rng: np.random.Generator) -> int:
        if rng.random() < spec.jump_p:
            return int(rng.integers(g.n))
        return super()._move(g, current, start, spec, rng)

    def get_description(self) -> str:
        return "带跳转的随机游走采样: 每步以固定概率跳到任意节点"


class ForestFireSampler(BaseSampler):
    """FF: 广度优先燃烧

    每个被点燃的节点抽取 x ~ Geometric(1−p_f) − 1（均值 p_f/(1−p_f)），
    从其未访问邻居中均匀烧掉 x 个（不足则全部），火熄灭时在均匀随机的未访问节点重新点燃。
    """

    method = "FF"

    def select_nodes(self, g: Graph, size: int, spec: SampleSpec, rng: np.random.Generator) -> np.ndarray:
        visited = _Visited(g.n)
        queue: deque[int] = deque()
        while len(visited) < size:
            if not queue:
                seed = visited.random_unvisited(rng)
                visited.add(seed)
                queue.append(seed)
                continue
            u = queue.popleft()
            burn = int(rng.geometric(1.0 - spec.forward_p_f)) - 1
            candidates = visited.unvisited(g.indices[g.indptr[u] : g.indptr[u + 1]])
            if burn <= 0 or candidates.size == 0:
                continue
            if burn < candidates.size:
                candidates = rng.choice(candidates, size=burn, replace=False)
            for v in candidates:
                if len(visited) >= size:
                    break
                visited.add(int(v))
                queue.append(int(v))
        return np.asarray(visited.order, dtype=np.int64)

    def get_description(self) -> str:
        return "森林火灾采样: 按几何分布数量向邻居扩散"


class SnowballSampler(BaseSampler):
    """SS: 从均匀随机种子出发按广度优先波次整体加入

    下一波会超过 s 时，从该波中均匀随机选出剩余名额；连通分量耗尽时换一个种子。
    """

    method = "SS"

    def select_nodes(self, g: Graph, size: int, spec: SampleSpec, rng: np.random.Generator) -> np.ndarray:
        visited = _Visited(g.n)
        while len(visited) < size:
            seed = visited.random_unvisited(rng)
            visited.add(seed)
            frontier = np.array([seed], dtype=np.int64)
            while len(visited) < size:
                reach = np.concatenate([g.indices[g.indptr[u] : g.indptr[u + 1]] for u in frontier])
                wave = visited.unvisited(np.unique(reach))
                if wave.size == 0:
                    break
                room = size - len(visited)
                if wave.size > room:
                    wave = np.sort(rng.choice(wave, size=room, replace=False))
                for v in wave:
                    visited.add(int(v))
                frontier = wave
        return np.asarray(visited.order, dtype=np.int64)

    def get_description(self) -> str:
        return "雪球采样: 逐层加入邻居波次"


SAMPLERS: dict[str, type[BaseSampler]] = {
    cls.method: cls
    for cls in (
        NodeSampler,
        EdgeSampler,
        RandomWalkSampler,
        FlyBackWalkSampler,
        JumpWalkSampler,
        ForestFireSampler,
        SnowballSampler,
    )
}


def get_sampler(method: str) -> BaseSampler:
    return SAMPLERS[method]()


def sample_nodes(g: Graph, spec: SampleSpec) -> np.ndarray:
    """按规格采样，返回升序节点编号"""
    return get_sampler(spec.method).sample_nodes(g, spec)


def sample_subgraph(g: Graph, spec: SampleSpec) -> InducedSubgraph:
    """按规格采样，返回诱导子图与节点映射"""
    return get_sampler(spec.method).sample(g, spec)


def sample(g: Graph, spec: SampleSpec) -> Graph:
    """按规格采样子网络

    Raises:
        SamplingError: 目标规模 s 不在 [1, n] 内
    """
    return sample_subgraph(g, spec).graph
