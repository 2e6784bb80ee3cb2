"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: closed_form.py
@DateTime: 2025-07-04
@Docs: DCBM / LCD / ER 下的总体量闭式、ρ→r 与 ρ→m 的逆映射、按 ρ̂ 粗分类生成模型
"""

import math
from dataclasses import dataclass, field
from enum import Enum

from app.core.exceptions import OutOfRange
from app.utils.logger import logger
from app.utils.validators import ParamValidator
from config.model_config import ModelConfig


class ModelKind(str, Enum):
    """按 ρ̂ 区间粗分的生成模型"""

    PREFERENTIAL_ATTACHMENT = "PreferentialAttachment"
    ERDOS_RENYI = "ErdosRenyi"
    COMMUNITY_STRUCTURE = "CommunityStructure"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class ModelClass:
    """分类结果及所用区间边界"""

    kind: ModelKind
    rho: float | None
    bands: dict[str, tuple[float, float]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "rho": self.rho, "bands": {k: list(v) for k, v in self.bands.items()}}


@dataclass(frozen=True)
class DcbmClosedForm:
    """DCBM（B_ii = p > q = B_ij，π_i = 1/K）下的总体量

    Attributes:
        e_pop: 连边概率 E
        v_pop: 楔形概率 V
        t_pop: 三角形概率 T
        rho_pop: ρ = TE³/V³，只依赖 r 与 K
        cc_pop: cc = 3T/V
    """

    p: float
    q: float
    k: int
    mean_theta: float
    e_pop: float
    v_pop: float
    t_pop: float
    rho_pop: float
    cc_pop: float

    @property
    def r(self) -> float:
        return self.p / self.q


def rho_of_r(r: float, k: int) -> float:
    """ρ(r) = (Kr³ + 3K(K−1)r + K(K−1)(K−2)) / (r + K − 1)³

    Raises:
        ValueError: r ≤ 0 或 k < 2
    """
    r = ParamValidator.positive(r, "r")
    k = ParamValidator.integer_at_least(k, 2, "k")
    numerator = k * r**3 + 3 * k * (k - 1) * r + k * (k - 1) * (k - 2)
    return numerator / (r + k - 1) ** 3


def r_of_rho(rho: float, k: int) -> float:
    """由 ρ 反解 in-out-ratio r（ρ 关于 r 在 (1, ∞) 上严格递增）

    先从 [1, 2] 出发几何扩展上界直到夹住目标，再二分到区间宽度可忽略。

    Raises:
        OutOfRange: ρ ≤ 1（边界 r = 1）或 ρ ≥ K（边界 +inf）
    """
    k = ParamValidator.integer_at_least(k, 2, "k")
    if not math.isfinite(rho):
        raise OutOfRange(f"rho must be finite, got {rho}", boundary=math.nan)
    if rho <= 1.0:
        raise OutOfRange(f"rho={rho} <= 1: in-out-ratio is at its lower boundary r=1", boundary=1.0)
    if rho >= k:
        raise OutOfRange(f"rho={rho} >= K={k}: in-out-ratio diverges (r -> +inf)", boundary=math.inf)

    lo, hi = ModelConfig.BISECTION_INITIAL_BRACKET
    while rho_of_r(hi, k) < rho:
        lo, hi = hi, hi * 2.0

    for _ in range(ModelConfig.BISECTION_MAX_ITER):
        mid = 0.5 * (lo + hi)
        if rho_of_r(mid, k) < rho:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-13 * hi:
            break

    r = 0.5 * (lo + hi)
    residual = abs(rho_of_r(r, k) - rho)
    if residual > ModelConfig.BISECTION_RHO_TOL:
        logger.warning(f"二分残差超出容差 | rho: {rho} | K: {k} | 残差: {residual:.3e}")
    return r


def dcbm_population(p: float, q: float, k: int, mean_theta: float = 1.0) -> DcbmClosedForm:
    """DCBM 的总体量 E、V、T、ρ、cc（假设 𝔼θ² = 1）

    Raises:
        ValueError: 不满足 0 < q ≤ p ≤ 1、k ≥ 2 或 𝔼θ > 0
    """
    p = ParamValidator.probability(p, "p")
    q = ParamValidator.probability(q, "q")
    if not 0.0 < q <= p:
        raise ValueError(f"require 0 < q <= p <= 1, got p={p}, q={q}")
    k = ParamValidator.integer_at_least(k, 2, "k")
    mean_theta = ParamValidator.positive(mean_theta, "mean_theta")

    s = p / k + (k - 1) * q / k
    e_pop = mean_theta**2 * s
    v_pop = mean_theta**2 * s**2
    t_pop = (p**3 + 3 * (k - 1) * p * q**2 + (k - 1) * (k - 2) * q**3) / k**2
    cc_pop = 3 * (p**3 + 3 * (k - 1) * p * q**2 + (k - 1) * (k - 2) * q**3) / (mean_theta**2 * (p + (k - 1) * q) ** 2)
    return DcbmClosedForm(
        p=p,
        q=q,
        k=k,
        mean_theta=mean_theta,
        e_pop=e_pop,
        v_pop=v_pop,
        t_pop=t_pop,
        rho_pop=rho_of_r(p / q, k),
        cc_pop=cc_pop,
    )


def lcd_rho_asymptote(m: int) -> float:
    """LCD 模型下 𝔼(ρ̂) 的渐近值 3m(m−1) / (4(m+1)²)"""
    m = ParamValidator.integer_at_least(m, 1, "m")
    return 3 * m * (m - 1) / (4 * (m + 1) ** 2)


def m_of_rho(rho: float) -> int:
    """由 ρ 推断 LCD 的每步边数 m

    取使 |3m(m−1)/(4(m+1)²) − ρ| 最小的 m ≥ 1，并列时取较小者。

    Raises:
        OutOfRange: ρ < 0 或 ρ ≥ 3/4
    """
    if not math.isfinite(rho) or rho < 0:
        raise OutOfRange(f"rho must be >= 0, got {rho}", boundary=0.0)
    if rho >= ModelConfig.LCD_RHO_SUPREMUM:
        raise OutOfRange(f"rho={rho} >= 3/4 is outside the LCD range", boundary=math.inf)

    m = 1
    while lcd_rho_asymptote(m + 1) <= rho:
        m += 1
    # 此时 f(m) ≤ ρ < f(m+1)
    if abs(lcd_rho_asymptote(m + 1) - rho) < abs(lcd_rho_asymptote(m) - rho):
        return m + 1
    return m


def classify_model(rho: float | None, er_band_halfwidth: float | None = None) -> ModelClass:
    """按 ρ̂ 的取值区间粗略识别生成模型

    [0, 3/4) → 偏好连接；|ρ−1| ≤ 半宽 → ER；> 1 + 半宽 → 社区结构；其余（含无定义）→ 不确定。
    """
    halfwidth = ModelConfig.ER_BAND_HALFWIDTH if er_band_halfwidth is None else er_band_halfwidth
    if not 0.0 <= halfwidth < 1.0 - ModelConfig.LCD_RHO_SUPREMUM:
        raise ValueError(f"er_band_halfwidth must lie in [0, 0.25), got {halfwidth}")

    bands = {
        ModelKind.PREFERENTIAL_ATTACHMENT.value: (0.0, ModelConfig.LCD_RHO_SUPREMUM),
        ModelKind.INDETERMINATE.value: (ModelConfig.LCD_RHO_SUPREMUM, 1.0 - halfwidth),
        ModelKind.ERDOS_RENYI.value: (1.0 - halfwidth, 1.0 + halfwidth),
        ModelKind.COMMUNITY_STRUCTURE.value: (1.0 + halfwidth, math.inf),
    }

    if rho is None or not math.isfinite(rho) or rho < 0:
        kind = ModelKind.INDETERMINATE
    elif rho < ModelConfig.LCD_RHO_SUPREMUM:
        kind = ModelKind.PREFERENTIAL_ATTACHMENT
    elif abs(rho - 1.0) <= halfwidth:
        kind = ModelKind.ERDOS_RENYI
    elif rho > 1.0 + halfwidth:
        kind = ModelKind.COMMUNITY_STRUCTURE
    else:
        kind = ModelKind.INDETERMINATE
    return ModelClass(kind=kind, rho=rho, bands=bands)
