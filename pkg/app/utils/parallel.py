"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: parallel.py
@DateTime: 2025-07-03
@Docs: 确定性并行执行与随机数流派生
"""

import math
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Any, TypeVar

import numpy as np

from app.utils.logger import logger

T = TypeVar("T")
R = TypeVar("R")


def derive_seed_sequence(seed: int, *keys: int) -> np.random.SeedSequence:
    """按 (seed, keys) 派生独立的种子序列

    与 ``SeedSequence(seed).spawn(...)`` 的第 keys 个子序列等价，但不依赖调用顺序，
    因此任意并行划分下同一个 (seed, keys) 得到同一条随机流。

    Args:
        seed: 主种子
        *keys: 计数器键（例如块编号、重复编号）

    Returns:
        种子序列
    """
    return np.random.SeedSequence(int(seed), spawn_key=tuple(int(k) for k in keys))


def derive_rng(seed: int, *keys: int) -> np.random.Generator:
    """派生随机数生成器"""
    return np.random.default_rng(derive_seed_sequence(seed, *keys))


def derive_seed(seed: int, *keys: int) -> int:
    """派生一个 63 位整数种子，便于写入参数对象和输出元数据"""
    return int(derive_seed_sequence(seed, *keys).generate_state(2, np.uint64)[0] >> np.uint64(1))


_shared: Any = None


def _install_shared(value: Any) -> None:
    global _shared
    _shared = value


def _call_with_shared(func: Callable[[Any, T], R], task: T) -> R:
    return func(_shared, task)


def parallel_map(func: Callable[..., R], items: Iterable[T], workers: int = 1, shared: Any = None) -> list[R]:
    """按输入顺序返回结果的并行 map

    workers <= 1 时在当前进程内顺序执行；否则使用进程池，块大小只依赖任务数与进程数，
    结果顺序与输入一致，与进程数无关。

    给出 shared 时以 ``func(shared, task)`` 调用：shared（例如整张图）在每个工作进程启动时
    传入一次，任务本身只携带块编号、规格等小对象。

    Args:
        func: 可被 pickle 的模块级函数
        items: 任务参数
        workers: 进程数
        shared: 所有任务共用的只读上下文

    Returns:
        结果列表
    """
    tasks: Sequence[Any] = list(items)
    call = func if shared is None else partial(func, shared)
    if workers <= 1 or len(tasks) <= 1:
        return [call(task) for task in tasks]

    chunksize = max(1, math.ceil(len(tasks) / (workers * 4)))
    logger.debug(f"并行执行 | 任务数: {len(tasks)} | 进程数: {workers} | 块大小: {chunksize}")
    if shared is None:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(func, tasks, chunksize=chunksize))
    with ProcessPoolExecutor(max_workers=workers, initializer=_install_shared, initargs=(shared,)) as executor:
        return list(executor.map(partial(_call_with_shared, func), tasks, chunksize=chunksize))
