"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: __init__.py
@DateTime: 2025-07-10
@Docs: 动态网络与联署数据模块初始化
"""

from .series import Snapshot, SnapshotSeries, series_stats, true_in_out_ratio
from .wpc import SponsorshipRecord, WpcNetwork, build_wpc_network, build_wpc_series, labels_for, wpc_scores

__all__ = [
    "Snapshot",
    "SnapshotSeries",
    "SponsorshipRecord",
    "WpcNetwork",
    "build_wpc_network",
    "build_wpc_series",
    "labels_for",
    "series_stats",
    "true_in_out_ratio",
    "wpc_scores",
]
