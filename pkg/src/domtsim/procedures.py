"""Anytime discovery-rate procedures with predictable thresholds.

Each procedure is a small state machine: threshold() is pure and reports the
level for the upcoming hypothesis, decide() turns (p, level) into a decision,
classify() derives the candidate/discard flags the state transition needs, and
update() consumes exactly one step. Keeping the transition explicit is what
lets a wrapper drive the state with virtual decisions while acting on
perturbed ones.
"""

from __future__ import annotations

import math
import warnings
from typing import Optional, Tuple

import numpy as np

from .core import GAMMA, GammaSequence

PROCEDURES = ("lond", "lord", "saffron", "addis", "elond")


def e_value(p: float, kappa: float) -> float:
    """Power calibrator kappa * p^(kappa - 1); integrates to 1 over [0, 1]."""
    if not 0.0 < kappa < 1.0:
        raise ValueError(f"calibrator exponent must be in (0, 1), got {kappa}")
    if p < 0.0 or p > 1.0:
        raise ValueError(f"p-value outside [0, 1]: {p}")
    if p == 0.0:
        return math.inf
    return kappa * p ** (kappa - 1.0)


class Procedure:
    """Base class; subclasses fill in threshold() and _transition()."""

    name = "?"
    #: candidate threshold (p <= lambda_cand), None when the rule has none
    lambda_cand: Optional[float] = None
    #: discard threshold (p > tau_disc), None when the rule never discards
    tau_disc: Optional[float] = None

    def __init__(self, alpha: float, seq: Optional[GammaSequence] = None):
        if not 0.0 < alpha < 1.0:
            raise ValueError(f"alpha must be in (0, 1), got {alpha}")
        self.alpha = float(alpha)
        self.seq = seq if seq is not None else GAMMA
        self._t = 1  # 1-based index of the upcoming hypothesis

    @property
    def t(self) -> int:
        return self._t

    def threshold(self) -> float:
        raise NotImplementedError

    def decide(self, p: float, level: float) -> bool:
        """Default rule: reject iff p <= level (ties reject; p = 0 always does)."""
        return p <= level

    def classify(self, p: float) -> Tuple[bool, bool]:
        """(candidate, discard) flags for the observed p."""
        cand = self.lambda_cand is not None and p <= self.lambda_cand
        disc = self.tau_disc is not None and p > self.tau_disc
        return cand, disc

    def update(self, decision: bool, candidate: bool = False, discard: bool = False) -> None:
        self._transition(bool(decision), bool(candidate), bool(discard))
        self._t += 1

    def _transition(self, decision: bool, candidate: bool, discard: bool) -> None:
        raise NotImplementedError


class Lond(Procedure):
    """Level alpha * gamma_t * max(1, R_{t-1})."""

    name = "lond"

    def __init__(self, alpha: float, seq: Optional[GammaSequence] = None):
        super().__init__(alpha, seq)
        self.rejections = 0

    def threshold(self) -> float:
        return self.alpha * self.seq.value(self._t) * max(1, self.rejections)

    def _transition(self, decision, candidate, discard):
        if decision:
            self.rejections += 1


class ELond(Procedure):
    """LOND levels, but bets e-values: reject iff e(p) >= 1 / level."""

    name = "elond"

    def __init__(self, alpha: float, kappa_calibrator: float = 0.5,
                 seq: Optional[GammaSequence] = None):
        super().__init__(alpha, seq)
        if not 0.0 < kappa_calibrator < 1.0:
            raise ValueError(
                f"calibrator exponent must be in (0, 1), got {kappa_calibrator}")
        self.kappa_calibrator = float(kappa_calibrator)
        self.rejections = 0

    def threshold(self) -> float:
        return self.alpha * self.seq.value(self._t) * max(1, self.rejections)

    def decide(self, p: float, level: float) -> bool:
        if level <= 0.0:
            return False
        if p == 0.0:
            warnings.warn("p = 0: e-value is infinite, rejecting", RuntimeWarning)
            return True
        return self.kappa_calibrator * p ** (self.kappa_calibrator - 1.0) >= 1.0 / level

    def _transition(self, decision, candidate, discard):
        if decision:
            self.rejections += 1


class _RejectionLines:
    """Shared bookkeeping: per-rejection times/counters in growable arrays."""

    def __init__(self):
        self._tau = np.zeros(16, dtype=np.int64)
        self._cnt = np.zeros(16, dtype=np.int64)
        self.n = 0  # rejections recorded so far

    def _room(self):
        if self.n == len(self._tau):
            self._tau = np.concatenate([self._tau, np.zeros(len(self._tau), dtype=np.int64)])
            self._cnt = np.concatenate([self._cnt, np.zeros(len(self._cnt), dtype=np.int64)])

    def append(self, tau: int):
        self._room()
        self._tau[self.n] = tau
        self._cnt[self.n] = 0
        self.n += 1

    @property
    def tau(self) -> np.ndarray:
        return self._tau[: self.n]

    @property
    def cnt(self) -> np.ndarray:
        return self._cnt[: self.n]


class LordPlusPlus(Procedure):
    """Level gamma_t * w0 + (alpha - w0) * gamma_{t - tau_1} + alpha * sum_{j>=2} gamma_{t - tau_j}."""

    name = "lord"

    def __init__(self, alpha: float, w0: Optional[float] = None,
                 seq: Optional[GammaSequence] = None):
        super().__init__(alpha, seq)
        w0 = alpha / 2.0 if w0 is None else float(w0)
        if not 0.0 < w0 <= alpha:
            raise ValueError(f"w0 must be in (0, alpha], got {w0}")
        self.w0 = w0
        self._lines = _RejectionLines()

    @property
    def rejections(self) -> int:
        return self._lines.n

    def threshold(self) -> float:
        t = self._t
        tab = self.seq.padded(t)
        level = self.w0 * tab[t]
        n = self._lines.n
        if n >= 1:
            level += (self.alpha - self.w0) * tab[t - self._lines._tau[0]]
        if n >= 2:
            idx = t - self._lines._tau[1:n]
            level += self.alpha * float(tab.take(idx).sum())
        return float(level)

    def _transition(self, decision, candidate, discard):
        if decision:
            self._lines.append(self._t)


class Saffron(Procedure):
    """Candidate-adaptive rule: spends only on steps with p <= lambda_cand.

    Level is min(lambda_cand, (1 - lambda_cand) * [w0 * gamma_{t - C0}
    + (alpha - w0) * gamma_{t - tau_1 - C1} + alpha * sum_{j>=2}
    gamma_{t - tau_j - Cj}]) where Cj counts candidates seen strictly after
    the j-th rejection (C0 counts all candidates so far).
    """

    name = "saffron"

    def __init__(self, alpha: float, w0: Optional[float] = None,
                 lambda_cand: float = 0.5, seq: Optional[GammaSequence] = None):
        super().__init__(alpha, seq)
        if not 0.0 < lambda_cand < 1.0:
            raise ValueError(f"lambda_cand must be in (0, 1), got {lambda_cand}")
        w0 = alpha / 2.0 if w0 is None else float(w0)
        if not 0.0 < w0 <= alpha:
            raise ValueError(f"w0 must be in (0, alpha], got {w0}")
        self.w0 = w0
        self.lambda_cand = float(lambda_cand)
        self._lines = _RejectionLines()
        self._c0 = 0  # candidates seen so far

    @property
    def rejections(self) -> int:
        return self._lines.n

    def threshold(self) -> float:
        t = self._t
        tab = self.seq.padded(t)
        level = self.w0 * tab[t - self._c0]
        n = self._lines.n
        if n >= 1:
            level += (self.alpha - self.w0) * tab[t - self._lines._tau[0] - self._lines._cnt[0]]
        if n >= 2:
            idx = t - self._lines._tau[1:n] - self._lines._cnt[1:n]
            level += self.alpha * float(tab.take(idx).sum())
        return float(min(self.lambda_cand, (1.0 - self.lambda_cand) * level))

    def _transition(self, decision, candidate, discard):
        if candidate:
            self._c0 += 1
            if self._lines.n:
                self._lines._cnt[: self._lines.n] += 1
        if decision:
            self._lines.append(self._t)


class Addis(Procedure):
    """Discarding variant: steps with p > tau_disc never advance the clock.

    With n the count of non-discarded steps so far, kappa*_j the value of n
    just after the j-th rejection, and Cj candidate counts as in the
    candidate-adaptive rule, the level is min(lambda_cand,
    (tau_disc - lambda_cand) * [w0 * gamma_{n - C0 + 1} + (alpha - w0) *
    gamma_{n - kappa*_1 - C1 + 1} + alpha * sum_{j>=2}
    gamma_{n - kappa*_j - Cj + 1}]). At tau_disc = 1 this reduces exactly to
    the candidate-adaptive rule.
    """

    name = "addis"

    def __init__(self, alpha: float, w0: Optional[float] = None,
                 lambda_cand: float = 0.25, tau_disc: float = 0.5,
                 seq: Optional[GammaSequence] = None):
        super().__init__(alpha, seq)
        if not 0.0 < tau_disc <= 1.0:
            raise ValueError(f"tau_disc must be in (0, 1], got {tau_disc}")
        if not 0.0 < lambda_cand < tau_disc:
            raise ValueError(
                f"lambda_cand must be in (0, tau_disc), got {lambda_cand} vs {tau_disc}")
        w0 = alpha / 2.0 if w0 is None else float(w0)
        if not 0.0 < w0 <= alpha:
            raise ValueError(f"w0 must be in (0, alpha], got {w0}")
        self.w0 = w0
        self.lambda_cand = float(lambda_cand)
        self.tau_disc = float(tau_disc)
        self._lines = _RejectionLines()  # _tau holds kappa*_j here
        self._c0 = 0
        self._sel = 0  # non-discarded steps seen so far

    @property
    def rejections(self) -> int:
        return self._lines.n

    @property
    def effective_time(self) -> int:
        return self._sel + 1

    def threshold(self) -> float:
        e = self._sel + 1
        tab = self.seq.padded(e)
        level = self.w0 * tab[e - self._c0]
        n = self._lines.n
        if n >= 1:
            level += (self.alpha - self.w0) * tab[e - self._lines._tau[0] - self._lines._cnt[0]]
        if n >= 2:
            idx = e - self._lines._tau[1:n] - self._lines._cnt[1:n]
            level += self.alpha * float(tab.take(idx).sum())
        return float(min(self.lambda_cand, (self.tau_disc - self.lambda_cand) * level))

    def _transition(self, decision, candidate, discard):
        if discard:
            if decision or candidate:
                raise ValueError("a discarded step cannot be a candidate or rejection")
            return
        if candidate:
            self._c0 += 1
            if self._lines.n:
                self._lines._cnt[: self._lines.n] += 1
        self._sel += 1
        if decision:
            self._lines.append(self._sel)


def make_procedure(name: str, alpha: float = 0.05, w0: Optional[float] = None,
                   lambda_cand: Optional[float] = None, tau_disc: float = 0.5,
                   kappa_calibrator: float = 0.5,
                   seq: Optional[GammaSequence] = None) -> Procedure:
    """Build a procedure by config name, applying per-rule defaults."""
    if name == "lond":
        return Lond(alpha, seq)
    if name == "lord":
        return LordPlusPlus(alpha, w0, seq)
    if name == "saffron":
        return Saffron(alpha, w0, 0.5 if lambda_cand is None else lambda_cand, seq)
    if name == "addis":
        return Addis(alpha, w0, 0.25 if lambda_cand is None else lambda_cand, tau_disc, seq)
    if name == "elond":
        return ELond(alpha, kappa_calibrator, seq)
    raise ValueError(f"unknown procedure {name!r}; expected one of {PROCEDURES}")
