"""Counter-based randomness and alternative p-value distributions.

Every run owns an isolated stream keyed by (seed, replication, channel), so
replications can execute in any order or in parallel and still reproduce
bit-for-bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

_MASK64 = (1 << 64) - 1
MAX_REPLICATION = 1 << 32
MAX_CHANNEL = 1 << 16


def derive(seed: int, replication: int, channel: int = 0) -> int:
    """Injective 128-bit key for (seed mod 2^64, replication, channel)."""
    if not 0 <= replication < MAX_REPLICATION:
        raise ValueError(f"replication must be in [0, 2^32), got {replication}")
    if not 0 <= channel < MAX_CHANNEL:
        raise ValueError(f"channel must be in [0, 2^16), got {channel}")
    return ((seed & _MASK64) << 64) | (replication << 16) | channel


class RngState:
    """Philox-backed generator for one (seed, replication, channel) stream."""

    def __init__(self, key: int):
        if not 0 <= key < (1 << 128):
            raise ValueError("key must fit in 128 bits")
        self.key = key
        self._gen = np.random.Generator(np.random.Philox(key=key))

    @classmethod
    def from_seed(cls, seed: int, replication: int = 0, channel: int = 0) -> "RngState":
        return cls(derive(seed, replication, channel))

    def uniform01(self) -> float:
        """One draw from [0, 1)."""
        return float(self._gen.random())

    def uniforms(self, n: int) -> np.ndarray:
        return self._gen.random(n)

    def normal(self) -> float:
        return float(self._gen.standard_normal())

    def normals(self, n: int) -> np.ndarray:
        return self._gen.standard_normal(n)


def uniform01(rng: RngState) -> float:
    return rng.uniform01()


@dataclass(frozen=True)
class BetaAlt:
    """Beta(a, b) alternative p-values; small a piles mass near zero."""

    a: float
    b: float

    def __post_init__(self):
        if not self.a > 0 or not self.b > 0:
            raise ValueError(f"beta shapes must be positive, got a={self.a}, b={self.b}")

    @property
    def mean(self) -> float:
        return self.a / (self.a + self.b)


@dataclass(frozen=True)
class LinearDetectability:
    """Alternative with cdf G(x) = min(1, slope * x); sampled as u / slope."""

    slope: float

    def __post_init__(self):
        if not self.slope >= 1:
            raise ValueError(f"slope must be >= 1, got {self.slope}")

    def cdf(self, x: float) -> float:
        return min(1.0, max(0.0, self.slope * x))


AltDistribution = Union[BetaAlt, LinearDetectability]


def gamma_variate(rng: RngState, shape: float) -> float:
    """Gamma(shape, 1) draw via the Marsaglia-Tsang squeeze.

    For shape < 1 the draw is boosted from shape + 1 with u^(1/shape), which is
    the regime the spiky alternatives (shape ~ 0.05) live in.
    """
    if not shape > 0:
        raise ValueError(f"shape must be positive, got {shape}")
    if shape < 1.0:
        return gamma_variate(rng, shape + 1.0) * rng.uniform01() ** (1.0 / shape)
    d = shape - 1.0 / 3.0
    c = 1.0 / math.sqrt(9.0 * d)
    while True:
        x = rng.normal()
        v = 1.0 + c * x
        if v <= 0.0:
            continue
        v = v * v * v
        u = rng.uniform01()
        # cheap squeeze first, exact log check as the fallback
        if u < 1.0 - 0.0331 * x * x * x * x:
            return d * v
        if u > 0.0 and math.log(u) < 0.5 * x * x + d * (1.0 - v + math.log(v)):
            return d * v


def sample_alt(dist: AltDistribution, rng: RngState) -> float:
    """One alternative p-value from dist."""
    if isinstance(dist, LinearDetectability):
        return rng.uniform01() / dist.slope
    ga = gamma_variate(rng, dist.a)
    gb = gamma_variate(rng, dist.b)
    total = ga + gb
    if total == 0.0:  # double underflow; vanishingly rare, but keep p valid
        return 0.0
    return ga / total
