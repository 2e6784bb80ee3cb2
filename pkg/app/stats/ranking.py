"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: ranking.py
@DateTime: 2025-07-07
@Docs: 基于秩的 AUC
"""

import numpy as np
from scipy import stats as sps

from app.core.exceptions import DegenerateStatistic


def rank_auc(scores_pos: list[float] | np.ndarray, scores_neg: list[float] | np.ndarray) -> float:
    """基于秩的 AUC = ℙ(正类得分 > 负类得分)，并列按 1/2 计（Mann–Whitney 中位秩）

    Raises:
        DegenerateStatistic: 任一组为空
    """
    pos = np.asarray(scores_pos, dtype=float)
    neg = np.asarray(scores_neg, dtype=float)
    if pos.size == 0 or neg.size == 0:
        raise DegenerateStatistic("rank AUC needs at least one score in each group")
    ranks = sps.rankdata(np.concatenate([pos, neg]))
    u_stat = ranks[: pos.size].sum() - pos.size * (pos.size + 1) / 2.0
    return float(u_stat / (pos.size * neg.size))
