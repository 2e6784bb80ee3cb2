"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: __init__.py
@DateTime: 2025-07-02
@Docs: 归一化聚类系数 ρ̂ 的网络分析库
"""
