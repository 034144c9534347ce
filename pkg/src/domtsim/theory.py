"""Closed-form calculators for the safety and cold-start bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class BurstyParams:
    """Burst-phase description: null fraction pi, detectability slope mu, prefix fraction rho."""

    pi: float
    mu: float
    rho: float

    def __post_init__(self):
        if not 0.0 <= self.pi < 1.0:
            raise ValueError(f"pi must be in [0, 1), got {self.pi}")
        if not self.mu > 0:
            raise ValueError(f"mu must be positive, got {self.mu}")
        if not 0.0 < self.rho < 1.0:
            raise ValueError(f"rho must be in (0, 1), got {self.rho}")


def cold_start_tax(params: BurstyParams) -> float:
    """Critical cost ratio M*(rho) above which exploration wins after a cold start.

    M* = pi / (mu (1 - pi)) + sqrt(rho) / (mu (1 - pi) (1 - sqrt(rho))).
    """
    pi, mu, rho = params.pi, params.mu, params.rho
    sr = math.sqrt(rho)
    lead = 1.0 / (mu * (1.0 - pi))
    return pi * lead + lead * sr / (1.0 - sr)


def critical_constants(params: BurstyParams) -> Tuple[float, float]:
    """(C1, C2) with C1 = (1-pi) mu (1-sqrt(rho)) and C2 = sqrt(rho) + pi (1-sqrt(rho)).

    The tax is C2 / C1; C1 scales recovered misses, C2 scales extra false
    rejections, both per unit of exploration budget.
    """
    pi, mu, rho = params.pi, params.mu, params.rho
    sr = math.sqrt(rho)
    c1 = (1.0 - pi) * mu * (1.0 - sr)
    c2 = sr + pi * (1.0 - sr)
    return c1, c2


def fdp_inflation_term(t: int, kappa: float, alpha: float, delta: float,
                       rejections: int) -> float:
    """High-probability FDP overshoot at time t with at least `rejections` rejections.

    (kappa alpha sqrt(t) + sqrt((t/2) ln(1/delta))) / max(1, rejections), valid
    with probability 1 - delta.
    """
    _check_common(kappa, alpha)
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if not 0.0 < delta < 1.0:
        raise ValueError(f"delta must be in (0, 1), got {delta}")
    if rejections < 0:
        raise ValueError(f"rejections must be nonnegative, got {rejections}")
    return (kappa * alpha * math.sqrt(t)
            + math.sqrt((t / 2.0) * math.log(1.0 / delta))) / max(1, rejections)


def regret_gap_bound(horizon: int, a: float, kappa: float, alpha: float) -> float:
    """Worst-case expected regret gap of the wrapped run: a * kappa * alpha * sqrt(T)."""
    _check_common(kappa, alpha)
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    if not a > 0:
        raise ValueError(f"a must be positive, got {a}")
    return a * kappa * alpha * math.sqrt(horizon)


def drought_threshold_ratio(lambda_base: float, t: int, kappa: float, alpha: float) -> float:
    """Mean tested-to-base threshold ratio 1 + (kappa alpha / (2 sqrt(t))) / lambda_base."""
    _check_common(kappa, alpha)
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if not lambda_base > 0:
        raise ValueError(f"lambda_base must be positive, got {lambda_base}")
    return 1.0 + (kappa * alpha / (2.0 * math.sqrt(t))) / lambda_base


def extra_fp_budget(horizon: int, kappa: float, alpha: float) -> float:
    """Expected extra rejections on pure noise over T steps: kappa * alpha * sqrt(T)."""
    _check_common(kappa, alpha)
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    return kappa * alpha * math.sqrt(horizon)


def _check_common(kappa: float, alpha: float) -> None:
    if not kappa >= 0:
        raise ValueError(f"kappa must be nonnegative, got {kappa}")
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")
