"""Synthetic stream generators and p-value file ingestion.

All generators draw in a fixed documented order (labels first, then a uniform
for every slot, then alternative overwrites in position order), so a stream is
reproducible byte-for-byte from (spec, seed).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

import numpy as np

from .core import StreamItem
from .sampling import AltDistribution, BetaAlt, LinearDetectability, RngState, sample_alt


@dataclass(frozen=True)
class Stationary:
    """Independent steps: alternative with probability 1 - pi0."""

    t: int = 5000
    pi0: float = 0.8
    alt: AltDistribution = field(default_factory=lambda: BetaAlt(0.05, 20.0))

    def __post_init__(self):
        if self.t < 1:
            raise ValueError(f"horizon must be >= 1, got {self.t}")
        if not 0.0 <= self.pi0 <= 1.0:
            raise ValueError(f"pi0 must be in [0, 1], got {self.pi0}")


@dataclass(frozen=True)
class Bursty:
    """Pure nulls through t0, then alternatives arrive with probability 1 - pi_post."""

    t: int = 6000
    t0: Optional[int] = None  # defaults to the midpoint
    pi_post: float = 0.2
    alt: AltDistribution = field(default_factory=lambda: BetaAlt(0.3, 15.0))

    def __post_init__(self):
        if self.t0 is None:
            object.__setattr__(self, "t0", self.t // 2)
        if self.t < 1:
            raise ValueError(f"horizon must be >= 1, got {self.t}")
        if not 0 <= self.t0 < self.t:
            raise ValueError(f"burst onset must satisfy 0 <= t0 < t, got t0={self.t0}, t={self.t}")
        if not 0.0 <= self.pi_post <= 1.0:
            raise ValueError(f"pi_post must be in [0, 1], got {self.pi_post}")

    @property
    def rho(self) -> float:
        """Null-prefix fraction t0 / t."""
        return self.t0 / self.t


@dataclass(frozen=True)
class TwoPhase:
    """Deterministic labels: null for t <= T/2, alternative after."""

    t: int = 4000
    alt: AltDistribution = field(default_factory=lambda: LinearDetectability(5.0))

    def __post_init__(self):
        if self.t < 2 or self.t % 2:
            raise ValueError(f"horizon must be even and >= 2, got {self.t}")


@dataclass(frozen=True)
class Drought:
    """Mixed signal up to t0, k pure-null steps, then mixed signal resumes."""

    t: int = 5000
    t0: Optional[int] = None  # defaults to t/5
    k: Optional[int] = None   # defaults to 2t/5
    pi0: float = 0.8
    alt: AltDistribution = field(default_factory=lambda: BetaAlt(0.05, 20.0))

    def __post_init__(self):
        if self.t0 is None:
            object.__setattr__(self, "t0", max(1, self.t // 5))
        if self.k is None:
            object.__setattr__(self, "k", max(1, (2 * self.t) // 5))
        if self.t < 1:
            raise ValueError(f"horizon must be >= 1, got {self.t}")
        if not 0 < self.t0 < self.t:
            raise ValueError(f"drought onset must satisfy 0 < t0 < t, got {self.t0}")
        if self.k < 1 or self.t0 + self.k >= self.t:
            raise ValueError(f"drought length must satisfy 1 <= k < t - t0, got k={self.k}")
        if not 0.0 <= self.pi0 <= 1.0:
            raise ValueError(f"pi0 must be in [0, 1], got {self.pi0}")


@dataclass(frozen=True)
class FileSource:
    """Column mapping into a comma- or whitespace-delimited p-value file."""

    path: str
    p_col: int = 0
    truth_col: Optional[int] = None
    has_header: bool = False

    def __post_init__(self):
        if self.p_col < 0 or (self.truth_col is not None and self.truth_col < 0):
            raise ValueError("column indices must be nonnegative")


EnvSpec = Union[Stationary, Bursty, TwoPhase, Drought, FileSource]


class Stream:
    """Materialized stream: p-values plus truth labels (None for unlabeled)."""

    def __init__(self, p: np.ndarray, truth: Optional[np.ndarray]):
        self.p = np.asarray(p, dtype=np.float64)
        self.truth = None if truth is None else np.asarray(truth, dtype=np.int8)
        if self.truth is not None and len(self.truth) != len(self.p):
            raise ValueError("p and truth lengths differ")

    def __len__(self) -> int:
        return len(self.p)

    def __iter__(self) -> Iterator[StreamItem]:
        if self.truth is None:
            for i, p in enumerate(self.p):
                yield StreamItem(t=i + 1, p_value=float(p))
        else:
            for i, (p, y) in enumerate(zip(self.p, self.truth)):
                yield StreamItem(t=i + 1, p_value=float(p), truth=int(y))


def _fill_alts(p: np.ndarray, truth: np.ndarray, alt: AltDistribution, rng: RngState) -> None:
    for i in np.flatnonzero(truth):
        p[i] = sample_alt(alt, rng)


def generate(spec: EnvSpec, rng: Optional[RngState]) -> Stream:
    """Draw one stream for spec; file sources are materialized (rng unused)."""
    if isinstance(spec, FileSource):
        items = list(iter_pvalue_file(spec))
        p = np.array([it.p_value for it in items], dtype=np.float64)
        truth = None
        if spec.truth_col is not None:
            truth = np.array([it.truth for it in items], dtype=np.int8)
        return Stream(p, truth)
    if rng is None:
        raise ValueError("synthetic environments need an rng")

    n = spec.t
    if isinstance(spec, Stationary):
        truth = (rng.uniforms(n) < 1.0 - spec.pi0).astype(np.int8)
    elif isinstance(spec, Bursty):
        truth = np.zeros(n, dtype=np.int8)
        post = rng.uniforms(n - spec.t0) < 1.0 - spec.pi_post
        truth[spec.t0:] = post.astype(np.int8)
    elif isinstance(spec, TwoPhase):
        truth = np.zeros(n, dtype=np.int8)
        truth[n // 2:] = 1
    elif isinstance(spec, Drought):
        lab = (rng.uniforms(n) < 1.0 - spec.pi0).astype(np.int8)
        lab[spec.t0: spec.t0 + spec.k] = 0
        truth = lab
    else:
        raise ValueError(f"unknown environment spec {type(spec).__name__}")

    p = rng.uniforms(n)  # null p-values; alternative slots overwritten below
    _fill_alts(p, truth, spec.alt, rng)
    return Stream(p, truth)


def iter_pvalue_file(spec: FileSource) -> Iterator[StreamItem]:
    """Lazily yield items from a p-value file; bad lines are hard errors.

    Delimiter is a comma when the line contains one, otherwise whitespace.
    Blank lines are skipped; anything else that fails to parse raises with
    its 1-based line number.
    """
    if not os.path.exists(spec.path):
        raise FileNotFoundError(f"p-value file not found: {spec.path}")
    t = 0
    with open(spec.path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            if spec.has_header and lineno == 1:
                continue
            line = raw.strip()
            if not line:
                continue
            cells = line.split(",") if "," in line else line.split()
            try:
                p = float(cells[spec.p_col])
            except (IndexError, ValueError) as exc:
                raise ValueError(f"{spec.path}:{lineno}: cannot read p-value "
                                 f"from column {spec.p_col}: {line!r}") from exc
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{spec.path}:{lineno}: p-value outside [0, 1]: {p}")
            truth = None
            if spec.truth_col is not None:
                try:
                    truth = int(cells[spec.truth_col])
                except (IndexError, ValueError) as exc:
                    raise ValueError(f"{spec.path}:{lineno}: cannot read truth label "
                                     f"from column {spec.truth_col}: {line!r}") from exc
                if truth not in (0, 1):
                    raise ValueError(f"{spec.path}:{lineno}: truth label must be 0 or 1, got {truth}")
            t += 1
            yield StreamItem(t=t, p_value=p, truth=truth)
