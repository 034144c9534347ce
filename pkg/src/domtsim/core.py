"""Shared primitives: spending sequence, stream items, regret weights, decision records."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

# Scale constant of the infinite discovery-spending sequence.
GAMMA_SCALE = 0.077208


class GammaSequence:
    """Memoized spending sequence gamma_t = c / (t * ln(max(t, 2))^2), t = 1, 2, ...

    The sequence is strictly positive, non-increasing from t = 2 on, and its
    partial sums stay below 1 at any horizon, which is what the alpha-investing
    procedures rely on. Values are cached in a geometrically grown table so long
    trajectory runs pay for each index once.
    """

    def __init__(self, scale: float = GAMMA_SCALE):
        if not scale > 0:
            raise ValueError(f"scale must be positive, got {scale}")
        self.scale = float(scale)
        # _tab[t] holds gamma_t; slot 0 is poisoned so a stray 0 index is loud.
        self._tab = np.array([np.nan])

    def _grow(self, n: int) -> None:
        m = max(n, 2 * (len(self._tab) - 1), 1024)
        t = np.arange(1, m + 1, dtype=np.float64)
        vals = self.scale / (t * np.log(np.maximum(t, 2.0)) ** 2)
        self._tab = np.concatenate(([np.nan], vals))

    def value(self, t: int) -> float:
        if t < 1:
            raise ValueError(f"gamma index must be >= 1, got {t}")
        if t >= len(self._tab):
            self._grow(t)
        return float(self._tab[t])

    def padded(self, n: int) -> np.ndarray:
        """Array of length n + 1 with tab[t] = gamma_t for t in 1..n (tab[0] is NaN).

        Intended for vectorized lookups by raw 1-based index; callers must not
        write into the returned view.
        """
        if n < 1:
            raise ValueError(f"horizon must be >= 1, got {n}")
        if n >= len(self._tab):
            self._grow(n)
        return self._tab[: n + 1]


#: Shared default sequence; procedures use this unless given their own.
GAMMA = GammaSequence()


def gamma(t: int) -> float:
    """gamma_t from the shared default sequence."""
    return GAMMA.value(t)


@dataclass(frozen=True)
class StreamItem:
    """One hypothesis in arrival order: 1-based index, p-value, optional truth label.

    truth is 1 for an alternative, 0 for a null, None when unlabeled (file mode).
    """

    t: int
    p_value: float
    truth: Optional[int] = None

    def __post_init__(self):
        if self.t < 1:
            raise ValueError(f"stream index must be >= 1, got {self.t}")
        if not 0.0 <= self.p_value <= 1.0:
            raise ValueError(f"p-value outside [0, 1]: {self.p_value}")
        if self.truth not in (None, 0, 1):
            raise ValueError(f"truth label must be 0, 1 or None, got {self.truth!r}")


@dataclass(frozen=True)
class RegretWeights:
    """Per-error costs: a per false rejection, b per missed alternative."""

    a: float = 1.0
    b: float = 1.0

    def __post_init__(self):
        if not self.a > 0:
            raise ValueError(f"a must be positive, got {self.a}")
        if not self.b > 0:
            raise ValueError(f"b must be positive, got {self.b}")

    @property
    def w(self) -> float:
        """Normalized false-rejection weight a / (a + b)."""
        return self.a / (self.a + self.b)


def weighted_regret(v: int, m: int, weights: RegretWeights) -> float:
    """Realized cost a*V + b*M of v false rejections and m misses."""
    if v < 0 or m < 0:
        raise ValueError(f"counts must be nonnegative, got V={v}, M={m}")
    return weights.a * v + weights.b * m


@dataclass(frozen=True)
class DecisionRecord:
    """Everything observable about one tested hypothesis.

    lambda_base is the unperturbed threshold, xi the perturbation, and
    lambda_actual = min(1, lambda_base + xi) the level actually applied.
    delta_base is the decision the bare procedure would have made at
    lambda_base; delta_actual is the decision that was emitted. For the
    nonnegative-perturbation wrappers delta_base implies delta_actual; the
    signed-perturbation ablation deliberately breaks that, so the record type
    does not enforce it.
    """

    t: int
    lambda_base: float
    xi: float
    lambda_actual: float
    delta_base: bool
    delta_actual: bool

    def __post_init__(self):
        if self.t < 1:
            raise ValueError(f"record index must be >= 1, got {self.t}")
        if not 0.0 <= self.lambda_base <= 1.0:
            raise ValueError(f"lambda_base outside [0, 1]: {self.lambda_base}")
        if not 0.0 <= self.lambda_actual <= 1.0:
            raise ValueError(f"lambda_actual outside [0, 1]: {self.lambda_actual}")
