"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: validators.py
@DateTime: 2025-07-03
@Docs: 参数验证工具
"""

import math
import numbers


class ParamValidator:
    """参数验证器

    统一的数值参数检查，失败时抛出 ValueError（或调用方指定的子类）
    """

    @staticmethod
    def probability(value: float, name: str, error: type[ValueError] = ValueError) -> float:
        """验证概率取值在 [0, 1]"""
        if not (isinstance(value, numbers.Real) and 0.0 <= value <= 1.0):
            raise error(f"{name} must be a probability in [0, 1], got {value!r}")
        return float(value)

    @staticmethod
    def positive(value: float, name: str, error: type[ValueError] = ValueError) -> float:
        """验证取值为有限正数"""
        if not (isinstance(value, numbers.Real) and math.isfinite(value) and value > 0):
            raise error(f"{name} must be a positive finite number, got {value!r}")
        return float(value)

    @staticmethod
    def integer_at_least(value: int, minimum: int, name: str, error: type[ValueError] = ValueError) -> int:
        """验证整数不小于下限"""
        if isinstance(value, bool) or not isinstance(value, numbers.Integral) or value < minimum:
            raise error(f"{name} must be an integer >= {minimum}, got {value!r}")
        return int(value)

    @staticmethod
    def alpha(value: float, error: type[ValueError] = ValueError) -> float:
        """验证显著性水平 α ∈ (0, 1]"""
        if not (isinstance(value, numbers.Real) and 0.0 < value <= 1.0):
            raise error(f"alpha must lie in (0, 1], got {value!r}")
        return float(value)
