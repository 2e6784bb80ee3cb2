"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: normal.py
@DateTime: 2025-07-06
@Docs: 标准正态分布的分位数函数
"""

import math
import numbers

from app.core.exceptions import OutOfRange

# Acklam 有理逼近系数
_A = (-3.969683028665376e01, 2.209460984245205e02, -2.759285104469687e02, 1.383577518672690e02, -3.066479806614716e01, 2.506628277459239e00)
_B = (-5.447609879822406e01, 1.615858368580409e02, -1.556989798598866e02, 6.680131188771972e01, -1.328068155288572e01)
_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e00, -2.549732539343734e00, 4.374664141464968e00, 2.938163982698783e00)
_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e00, 3.754408661907416e00)

_P_LOW = 0.02425
_P_HIGH = 1.0 - _P_LOW
_SQRT_2PI = math.sqrt(2.0 * math.pi)


def _tail(q: float) -> float:
    c, d = _C, _D
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) / (
        (((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0
    )


def _rational(u: float) -> float:
    """分段有理逼近，相对误差约 1.15e-9"""
    if u < _P_LOW:
        return _tail(math.sqrt(-2.0 * math.log(u)))
    if u > _P_HIGH:
        return -_tail(math.sqrt(-2.0 * math.log1p(-u)))
    q = u - 0.5
    r = q * q
    a, b = _A, _B
    return (
        (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5])
        * q
        / (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0)
    )


def norm_cdf(x: float) -> float:
    """Φ(x)，用 erfc 保证尾部精度"""
    return 0.5 * math.erfc(-x / math.sqrt(2.0))


def inv_norm_cdf(u: float) -> float:
    """Φ⁻¹(u)

    先用有理逼近得到初值，再做一步 Halley 修正，绝对误差不超过 1e-9。
    下半区间直接计算，u > 0.5 时返回 −inv_norm_cdf(1−u)。当 1−u 在浮点下精确表示时
    （例如 u 为二进分数），inv_norm_cdf(u) + inv_norm_cdf(1−u) 严格为 0；一般情况下两者相差
    仅来自 1−u 的舍入。

    Args:
        u: 概率，0 < u < 1

    Returns:
        分位数

    Raises:
        OutOfRange: u 不在 (0, 1) 内
    """
    if not (isinstance(u, numbers.Real) and 0.0 < u < 1.0):
        raise OutOfRange(f"inverse normal CDF is defined on (0, 1), got {u!r}", boundary=math.nan)
    u = float(u)
    if u == 0.5:
        return 0.0
    if u > 0.5:
        return -inv_norm_cdf(1.0 - u)

    x = _rational(u)
    e = norm_cdf(x) - u
    step = e * _SQRT_2PI * math.exp(0.5 * x * x)
    return x - step / (1.0 + 0.5 * x * step)
