"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: __init__.py
@DateTime: 2025-07-04
@Docs: 理论量模块初始化
"""

from .closed_form import (
    DcbmClosedForm,
    ModelClass,
    ModelKind,
    classify_model,
    dcbm_population,
    lcd_rho_asymptote,
    m_of_rho,
    r_of_rho,
    rho_of_r,
)

__all__ = [
    "DcbmClosedForm",
    "ModelClass",
    "ModelKind",
    "classify_model",
    "dcbm_population",
    "lcd_rho_asymptote",
    "m_of_rho",
    "r_of_rho",
    "rho_of_r",
]
