"""Stochastic exploration wrappers around a base procedure.

The decoupled wrapper tests at lambda_base + xi with xi = eps_t * Z,
Z ~ Uniform[0, 1), eps_t = kappa * alpha / sqrt(t), but feeds the base
procedure only the virtual decision 1{p <= lambda_base}. The base state is
therefore byte-identical to a bare run on the same stream, which is the whole
safety argument. Two ablations share the interface: a deterministic offset
(xi = eps_t / 2, still decoupled) and a coupled-randomization variant that
draws xi from a Gaussian truncated to keep the threshold in [0, 1] and
updates on the perturbed decision, breaking both the sign and the decoupling
on purpose.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .core import DecisionRecord, StreamItem
from .procedures import Procedure
from .sampling import RngState

VARIANTS = ("none", "domt", "cr", "det_offset")

_BLOCK = 4096


@dataclass(frozen=True)
class DomtConfig:
    variant: str = "domt"
    kappa: float = 3.0

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown wrapper variant {self.variant!r}; expected one of {VARIANTS}")
        if not self.kappa >= 0:
            raise ValueError(f"kappa must be nonnegative, got {self.kappa}")


def exploration_amplitude(t: int, kappa: float, alpha: float) -> float:
    """eps_t = kappa * alpha / sqrt(t)."""
    if t < 1:
        raise ValueError(f"step index must be >= 1, got {t}")
    if not kappa >= 0:
        raise ValueError(f"kappa must be nonnegative, got {kappa}")
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")
    return kappa * alpha / math.sqrt(t)


class _DrawBuffer:
    """Block-buffered scalar draws; one sequential stream, cheap per step."""

    __slots__ = ("_rng", "_normal", "_buf", "_i")

    def __init__(self, rng: RngState, normal: bool):
        self._rng = rng
        self._normal = normal
        self._buf = np.empty(0)
        self._i = 0

    def next(self) -> float:
        if self._i >= len(self._buf):
            self._buf = self._rng.normals(_BLOCK) if self._normal else self._rng.uniforms(_BLOCK)
            self._i = 0
        v = self._buf[self._i]
        self._i += 1
        return float(v)


class WrappedProcedure:
    """Drives one base procedure through one trajectory under a wrapper variant."""

    def __init__(self, proc: Procedure, cfg: DomtConfig, rng: Optional[RngState] = None):
        if cfg.variant in ("domt", "cr") and rng is None:
            raise ValueError(f"variant {cfg.variant!r} needs a noise rng")
        self.proc = proc
        self.cfg = cfg
        self._draws = None
        if cfg.variant in ("domt", "cr"):
            self._draws = _DrawBuffer(rng, normal=(cfg.variant == "cr"))
        self._ka = cfg.kappa * proc.alpha

    def step_values(self, p: float) -> Tuple[float, float, float, bool, bool]:
        """(lambda_base, xi, lambda_actual, delta_base, delta_actual) for one p."""
        proc = self.proc
        variant = self.cfg.variant
        lam_base = proc.threshold()
        if variant == "domt":
            xi = (self._ka / math.sqrt(proc.t)) * self._draws.next()
        elif variant == "det_offset":
            xi = 0.5 * self._ka / math.sqrt(proc.t)
        elif variant == "cr":
            # Truncated Gaussian, mean 0, sd eps_t / 2, conditioned on the
            # interval [-lambda_base, 1 - lambda_base] so the perturbed
            # threshold stays in [0, 1]. Rejection sampling: the interval
            # always covers at least half the mass near 0, so the loop
            # terminates after ~2 draws on average.
            sigma = 0.5 * self._ka / math.sqrt(proc.t)
            if sigma == 0.0:
                xi = 0.0
            else:
                while True:
                    xi = sigma * self._draws.next()
                    if -lam_base <= xi <= 1.0 - lam_base:
                        break
        else:
            xi = 0.0
        lam_actual = min(1.0, lam_base + xi)
        delta_base = proc.decide(p, lam_base)
        delta_actual = proc.decide(p, lam_actual)
        cand, disc = proc.classify(p)
        if variant == "cr":
            # coupled ablation: the state sees what actually happened
            proc.update(delta_actual, cand, disc and not delta_actual)
        else:
            proc.update(delta_base, cand, disc)
        return lam_base, xi, lam_actual, delta_base, delta_actual

    def step(self, item: StreamItem) -> DecisionRecord:
        t = self.proc.t
        if item.t != t:
            raise ValueError(f"stream index {item.t} does not match procedure clock {t}")
        lam_base, xi, lam_actual, db, da = self.step_values(item.p_value)
        return DecisionRecord(t=t, lambda_base=lam_base, xi=xi,
                              lambda_actual=lam_actual, delta_base=db, delta_actual=da)
