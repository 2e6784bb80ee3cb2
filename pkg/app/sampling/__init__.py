"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: __init__.py
@DateTime: 2025-07-08
@Docs: 子网络采样模块初始化
"""

from .evaluator import SampleReport, evaluate_samplers, fraction_grid
from .sample_spec import SAMPLE_METHODS, SampleSpec
from .samplers import SAMPLERS, get_sampler, sample, sample_nodes, sample_subgraph

__all__ = [
    "SAMPLERS",
    "SAMPLE_METHODS",
    "SampleReport",
    "SampleSpec",
    "evaluate_samplers",
    "fraction_grid",
    "get_sampler",
    "sample",
    "sample_nodes",
    "sample_subgraph",
]
