"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: theta.py
@DateTime: 2025-07-05
@Docs: DCBM 度修正参数 θ 的分布
"""

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from app.core.exceptions import InvalidDistribution
from config.model_config import ModelConfig

ThetaKind = Literal["constant", "two_point", "power_law"]


@dataclass(frozen=True)
class ThetaLaw:
    """θ 的分布

    - constant: θ ≡ value
    - two_point: 以 probs 的概率取 values
    - power_law: Pareto(shape=α, 下界 lower_bound)，α > 2 保证二阶矩有限

    normalize_second_moment 为真时按分布的精确二阶矩缩放，使 𝔼θ² = 1。
    """

    kind: ThetaKind = "constant"
    values: tuple[float, ...] = (1.0,)
    probs: tuple[float, ...] = (1.0,)
    shape: float | None = None
    lower_bound: float = ModelConfig.POWERLAW_LOWER_BOUND
    normalize_second_moment: bool = False

    def __post_init__(self) -> None:
        if self.kind == "constant":
            if len(self.values) != 1 or not self.values[0] > 0:
                raise InvalidDistribution(f"constant theta needs one positive value, got {self.values}")
        elif self.kind == "two_point":
            if len(self.values) != len(self.probs) or len(self.values) < 1:
                raise InvalidDistribution("two_point theta needs matching values and probs")
            if any(p < 0 for p in self.probs) or not math.isclose(sum(self.probs), 1.0, abs_tol=1e-9):
                raise InvalidDistribution(f"probs must be nonnegative and sum to 1, got {self.probs}")
            if any(v < 0 for v in self.values) or not any(v > 0 for v in self.values):
                raise InvalidDistribution(f"values must be nonnegative with one positive, got {self.values}")
        elif self.kind == "power_law":
            if self.shape is None or not self.shape > 2:
                raise InvalidDistribution(f"power-law shape must exceed 2 for a finite second moment, got {self.shape}")
            if not self.lower_bound > 0:
                raise InvalidDistribution(f"power-law lower bound must be positive, got {self.lower_bound}")
        else:
            raise InvalidDistribution(f"unknown theta law {self.kind!r}")

    @classmethod
    def constant(cls, value: float = 1.0) -> "ThetaLaw":
        return cls(kind="constant", values=(float(value),), probs=(1.0,))

    @classmethod
    def two_point(
        cls,
        values: tuple[float, float] = (0.2, 1.0),
        probs: tuple[float, float] = (0.8, 0.2),
        normalize_second_moment: bool = False,
    ) -> "ThetaLaw":
        return cls(
            kind="two_point",
            values=tuple(float(v) for v in values),
            probs=tuple(float(p) for p in probs),
            normalize_second_moment=normalize_second_moment,
        )

    @classmethod
    def power_law(
        cls,
        shape: float,
        lower_bound: float = ModelConfig.POWERLAW_LOWER_BOUND,
        normalize_second_moment: bool = True,
    ) -> "ThetaLaw":
        return cls(
            kind="power_law",
            shape=float(shape),
            lower_bound=float(lower_bound),
            normalize_second_moment=normalize_second_moment,
        )

    def _raw_moments(self) -> tuple[float, float]:
        if self.kind == "constant":
            return self.values[0], self.values[0] ** 2
        if self.kind == "two_point":
            m1 = sum(p * v for p, v in zip(self.probs, self.values, strict=True))
            m2 = sum(p * v * v for p, v in zip(self.probs, self.values, strict=True))
            return m1, m2
        alpha, xm = self.shape, self.lower_bound
        return alpha * xm / (alpha - 1), alpha * xm**2 / (alpha - 2)

    @property
    def scale(self) -> float:
        """样本缩放因子"""
        if not self.normalize_second_moment:
            return 1.0
        return 1.0 / math.sqrt(self._raw_moments()[1])

    def mean(self) -> float:
        """𝔼θ（缩放后）"""
        return self._raw_moments()[0] * self.scale

    def second_moment(self) -> float:
        """𝔼θ²（缩放后）"""
        return self._raw_moments()[1] * self.scale**2

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        """独立抽取 n 个 θ"""
        if self.kind == "constant":
            raw = np.full(n, self.values[0], dtype=float)
        elif self.kind == "two_point":
            raw = rng.choice(np.asarray(self.values, dtype=float), size=n, p=np.asarray(self.probs, dtype=float))
        else:
            # numpy 的 pareto 是 Lomax 分布，加 1 后为下界 1 的 Pareto
            raw = self.lower_bound * (1.0 + rng.pareto(self.shape, size=n))
        return raw * self.scale

    def describe(self) -> dict:
        return {
            "kind": self.kind,
            "values": list(self.values),
            "probs": list(self.probs),
            "shape": self.shape,
            "lower_bound": self.lower_bound,
            "normalize_second_moment": self.normalize_second_moment,
            "mean": self.mean(),
            "second_moment": self.second_moment(),
        }
