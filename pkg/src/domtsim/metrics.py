"""Confusion accounting and the fixed trajectory schema."""

from __future__ import annotations

from dataclasses import dataclass

from .core import RegretWeights

#: Column order of every trajectory CSV this package writes.
TRAJECTORY_COLUMNS = (
    "run_id", "t", "procedure", "wrapper",
    "V", "S", "M", "R",
    "fdp", "power", "regret",
    "lambda_base", "lambda_actual", "dividend",
)


@dataclass
class ConfusionCounters:
    """Running counts after t labeled steps: V + S = R and S + M = n_alt."""

    t: int = 0
    v: int = 0  # false rejections
    s: int = 0  # true rejections
    m: int = 0  # missed alternatives
    n_alt: int = 0

    @property
    def r(self) -> int:
        return self.v + self.s


def update_counters(c: ConfusionCounters, truth: int, decision: bool) -> None:
    """Consume one labeled decision."""
    if truth not in (0, 1):
        raise ValueError(f"truth label must be 0 or 1, got {truth!r}")
    c.t += 1
    if truth == 1:
        c.n_alt += 1
        if decision:
            c.s += 1
        else:
            c.m += 1
    elif decision:
        c.v += 1


def fdp(c: ConfusionCounters) -> float:
    """V / max(1, R)."""
    return c.v / max(1, c.r)


def power(c: ConfusionCounters) -> float:
    """S / max(1, n_alt); zero by convention before any alternative arrives."""
    return c.s / max(1, c.n_alt)


def regret(c: ConfusionCounters, weights: RegretWeights) -> float:
    return weights.a * c.v + weights.b * c.m


def dividend(base: ConfusionCounters, wrapped: ConfusionCounters) -> int:
    """Extra true discoveries of the wrapped run over the bare run."""
    if base.t != wrapped.t:
        raise ValueError(f"paired counters out of step: {base.t} vs {wrapped.t}")
    return wrapped.s - base.s
