"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: base_sampler.py
@DateTime: 2025-07-08
@Docs: 子网络采样器基础接口定义
"""

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

import numpy as np

from app.graph.graph import Graph, InducedSubgraph, induced_subgraph
from app.utils.logger import logger
from app.utils.parallel import derive_rng

if TYPE_CHECKING:
    from app.sampling.sample_spec import SampleSpec


class BaseSampler(ABC):
    """采样器基础接口

    子类只负责选出节点集合，诱导子图与目标规模校验由基类统一完成
    """

    method: str = ""

    @abstractmethod
    def select_nodes(self, g: Graph, size: int, spec: "SampleSpec", rng: np.random.Generator) -> np.ndarray:
        """选出采样节点

        Args:
            g: 原图
            size: 目标节点数 s
            spec: 采样规格
            rng: 随机数生成器

        Returns:
            互不相同的节点编号
        """
        pass

    @abstractmethod
    def get_description(self) -> str:
        """获取采样器描述

        Returns:
            采样器描述信息
        """
        pass

    def sample_nodes(self, g: Graph, spec: "SampleSpec") -> np.ndarray:
        """按规格选出升序节点集合"""
        size = spec.target_size(g.n)
        rng = derive_rng(spec.seed)
        nodes = np.unique(np.asarray(self.select_nodes(g, size, spec, rng), dtype=np.int64))
        logger.debug(f"采样完成 | 方法: {self.method} | 目标: {size} | 实际: {nodes.size}")
        return nodes

    def sample(self, g: Graph, spec: "SampleSpec") -> InducedSubgraph:
        """采样并返回诱导子图及节点映射"""
        return induced_subgraph(g, self.sample_nodes(g, spec))
