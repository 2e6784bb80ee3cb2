"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: __init__.py
@DateTime: 2025-07-05
@Docs: 随机图生成器模块初始化
"""

from .block_models import DcbmParams, DcbmSample, ErParams, dcbm_from_degree, gen_dcbm, gen_er
from .lcd import LcdParams, LcdSample, gen_lcd
from .theta import ThetaLaw

__all__ = [
    "DcbmParams",
    "DcbmSample",
    "ErParams",
    "LcdParams",
    "LcdSample",
    "ThetaLaw",
    "dcbm_from_degree",
    "gen_dcbm",
    "gen_er",
    "gen_lcd",
]
