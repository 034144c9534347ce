"""Monte-Carlo experiment harness.

Replications are paired: the stream for replication r is drawn once from
channel 0 of (seed, r) and both the bare run and the wrapped run consume the
identical stream, with wrapper noise on channel 1. Aggregates are means and
standard errors over per-replication values, never pooled counts, and output
files are written atomically so a crashed run leaves no torn CSV behind.
"""

from __future__ import annotations

import csv
import json
import math
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import __version__
from .core import RegretWeights
from .domt import VARIANTS, DomtConfig, WrappedProcedure
from .environments import (Bursty, Drought, EnvSpec, FileSource, Stationary,
                           Stream, TwoPhase, generate, iter_pvalue_file)
from .metrics import TRAJECTORY_COLUMNS
from .procedures import PROCEDURES, make_procedure
from .sampling import BetaAlt, LinearDetectability, RngState, derive
from .theory import BurstyParams, cold_start_tax

VERSION_STRING = f"artifact-{__version__}"

_ENV_NAMES = {
    Stationary: "stationary",
    Bursty: "bursty",
    TwoPhase: "two_phase",
    Drought: "drought",
    FileSource: "file",
}

_STREAM_CHANNEL = 0
_NOISE_CHANNEL = 1


@dataclass(frozen=True)
class ExperimentConfig:
    env: EnvSpec = field(default_factory=Stationary)
    procedure: str = "lond"
    alpha: float = 0.05
    w0: Optional[float] = None
    lambda_cand: Optional[float] = None
    tau_disc: float = 0.5
    kappa_calibrator: float = 0.5
    wrapper: str = "domt"
    kappa: float = 3.0
    a: float = 1.0
    b: float = 1.0
    seed: int = 42
    replications: int = 1
    record_stride: int = 10
    workers: int = 1

    def __post_init__(self):
        if self.procedure not in PROCEDURES:
            raise ValueError(f"unknown procedure {self.procedure!r}; expected one of {PROCEDURES}")
        if self.wrapper not in VARIANTS:
            raise ValueError(f"unknown wrapper {self.wrapper!r}; expected one of {VARIANTS}")
        if self.replications < 1:
            raise ValueError(f"replications must be >= 1, got {self.replications}")
        if self.record_stride < 1:
            raise ValueError(f"record_stride must be >= 1, got {self.record_stride}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")
        RegretWeights(self.a, self.b)  # validates a, b > 0
        DomtConfig(self.wrapper, self.kappa)

    @property
    def weights(self) -> RegretWeights:
        return RegretWeights(self.a, self.b)

    def to_dict(self) -> dict:
        d = {
            "env": _ENV_NAMES[type(self.env)],
            "procedure": self.procedure,
            "alpha": self.alpha,
            "w0": self.w0,
            "lambda_cand": self.lambda_cand,
            "tau_disc": self.tau_disc,
            "kappa_calibrator": self.kappa_calibrator,
            "wrapper": self.wrapper,
            "kappa": self.kappa,
            "a": self.a,
            "b": self.b,
            "seed": self.seed,
            "replications": self.replications,
            "record_stride": self.record_stride,
            "workers": self.workers,
        }
        env = self.env
        if isinstance(env, FileSource):
            d["file"] = {"path": env.path, "p_col": env.p_col,
                         "truth_col": env.truth_col, "has_header": env.has_header}
            return d
        d["t"] = env.t
        if isinstance(env, Stationary):
            d["pi0"] = env.pi0
        elif isinstance(env, Bursty):
            d["t0"] = env.t0
            d["pi_post"] = env.pi_post
        elif isinstance(env, Drought):
            d["t0"] = env.t0
            d["k"] = env.k
            d["pi0"] = env.pi0
        alt = env.alt
        if isinstance(alt, BetaAlt):
            d["alt"] = {"kind": "beta", "a": alt.a, "b": alt.b}
        else:
            d["alt"] = {"kind": "linear", "slope": alt.slope}
        return d

    @classmethod
    def from_dict(cls, raw: dict) -> "ExperimentConfig":
        if not isinstance(raw, dict):
            raise ValueError(f"config must be a mapping, got {type(raw).__name__}")
        d = dict(raw)
        env_name = d.pop("env", "stationary")
        alt = _alt_from_dict(d.pop("alt", None))
        file_map = d.pop("file", None)
        env_keys = {k: d.pop(k) for k in ("t", "t0", "k", "pi0", "pi_post") if k in d}
        env = _env_from_parts(env_name, env_keys, alt, file_map)
        known = {"procedure", "alpha", "w0", "lambda_cand", "tau_disc",
                 "kappa_calibrator", "wrapper", "kappa", "a", "b", "seed",
                 "replications", "record_stride", "workers"}
        unknown = set(d) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(env=env, **d)


def _alt_from_dict(raw) -> Optional[object]:
    if raw is None:
        return None
    if not isinstance(raw, dict) or "kind" not in raw:
        raise ValueError(f"alt must be a mapping with a 'kind' key, got {raw!r}")
    d = dict(raw)
    kind = d.pop("kind")
    needed = {"beta": {"a", "b"}, "linear": {"slope"}}.get(kind)
    if needed is None:
        raise ValueError(f"unknown alt kind {kind!r}; expected 'beta' or 'linear'")
    if set(d) != needed:
        raise ValueError(f"alt kind {kind!r} needs keys {sorted(needed)}, got {sorted(d)}")
    return BetaAlt(a=d["a"], b=d["b"]) if kind == "beta" else LinearDetectability(slope=d["slope"])


def _env_from_parts(name: str, keys: dict, alt, file_map) -> EnvSpec:
    if name == "file":
        if not file_map or "path" not in file_map:
            raise ValueError("file environment needs file.path")
        extra = set(file_map) - {"path", "p_col", "truth_col", "has_header"}
        if extra:
            raise ValueError(f"unknown file keys: {sorted(extra)}")
        if keys or alt is not None:
            raise ValueError("file environment takes no t/pi/alt keys")
        return FileSource(**file_map)
    builders = {
        "stationary": (Stationary, {"t", "pi0"}),
        "bursty": (Bursty, {"t", "t0", "pi_post"}),
        "two_phase": (TwoPhase, {"t"}),
        "drought": (Drought, {"t", "t0", "k", "pi0"}),
    }
    if name not in builders:
        raise ValueError(f"unknown environment {name!r}; expected one of "
                         f"{sorted(builders) + ['file']}")
    cls_, allowed = builders[name]
    extra = set(keys) - allowed
    if extra:
        raise ValueError(f"environment {name!r} does not accept keys {sorted(extra)}")
    if alt is not None:
        keys = dict(keys, alt=alt)
    return cls_(**keys)


@dataclass
class RunTrace:
    """Full-resolution record of one run over one stream."""

    lambda_base: np.ndarray
    xi: np.ndarray
    lambda_actual: np.ndarray
    delta_base: np.ndarray
    delta_actual: np.ndarray
    v: np.ndarray  # cumulative false rejections (actual decisions)
    s: np.ndarray  # cumulative true rejections
    m: np.ndarray  # cumulative misses
    r: np.ndarray  # cumulative rejections
    n_alt: np.ndarray  # cumulative alternatives in the stream


def simulate_run(stream: Stream, cfg: ExperimentConfig, variant: str,
                 noise_rng: Optional[RngState]) -> RunTrace:
    """One procedure over one labeled stream under one wrapper variant."""
    if stream.truth is None:
        raise ValueError("simulate_run needs a labeled stream; use run_ingest for raw files")
    proc = make_procedure(cfg.procedure, alpha=cfg.alpha, w0=cfg.w0,
                          lambda_cand=cfg.lambda_cand, tau_disc=cfg.tau_disc,
                          kappa_calibrator=cfg.kappa_calibrator)
    wp = WrappedProcedure(proc, DomtConfig(variant, cfg.kappa), noise_rng)
    ps = stream.p.tolist()
    n = len(ps)
    lamb = np.empty(n)
    xiv = np.empty(n)
    lama = np.empty(n)
    db = np.empty(n, dtype=bool)
    da = np.empty(n, dtype=bool)
    step_values = wp.step_values
    for i in range(n):
        b0, x0, a0, dbi, dai = step_values(ps[i])
        lamb[i] = b0
        xiv[i] = x0
        lama[i] = a0
        db[i] = dbi
        da[i] = dai
    alt = stream.truth.astype(bool)
    s = np.cumsum(da & alt, dtype=np.int64)
    v = np.cumsum(da & ~alt, dtype=np.int64)
    n_alt = np.cumsum(alt, dtype=np.int64)
    return RunTrace(lambda_base=lamb, xi=xiv, lambda_actual=lama,
                    delta_base=db, delta_actual=da,
                    v=v, s=s, m=n_alt - s, r=v + s, n_alt=n_alt)


def simulate_pair(cfg: ExperimentConfig, rep: int) -> Tuple[Stream, RunTrace, Optional[RunTrace]]:
    """Stream plus paired (bare, wrapped) traces for replication rep."""
    stream = generate(cfg.env, RngState(derive(cfg.seed, rep, _STREAM_CHANNEL)))
    base = simulate_run(stream, cfg, "none", None)
    wrapped = None
    if cfg.wrapper != "none":
        noise = RngState(derive(cfg.seed, rep, _NOISE_CHANNEL))
        wrapped = simulate_run(stream, cfg, cfg.wrapper, noise)
    return stream, base, wrapped


def recorded_steps(n: int, stride: int) -> np.ndarray:
    """0-based indices recorded on the trajectory: every stride-th step plus the last."""
    idx = list(range(stride - 1, n, stride))
    if not idx or idx[-1] != n - 1:
        idx.append(n - 1)
    return np.asarray(idx, dtype=np.int64)


@dataclass
class SeriesResult:
    """Per-replication recorded trajectories and terminal values for one series."""

    wrapper_label: str
    ts: np.ndarray                   # recorded 1-based times
    fdp: np.ndarray                  # (reps, nrec)
    power: np.ndarray
    regret: np.ndarray
    dividend: np.ndarray
    lambda_base: np.ndarray
    lambda_actual: np.ndarray
    counts: Dict[str, np.ndarray]    # recorded V/S/M/R, each (reps, nrec)
    terminal: Dict[str, np.ndarray]  # per-rep V/S/M/R/fdp/power/regret/dividend at T

    def terminal_summary(self) -> dict:
        out = {}
        for key, vals in self.terminal.items():
            mean, se = mean_se(vals)
            out[key] = {"mean": mean, "se": se}
        return out


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    series: Dict[str, SeriesResult]  # "base" plus "wrapped" when a wrapper ran

    def summary_dict(self) -> dict:
        return {
            "version": VERSION_STRING,
            "config": self.config.to_dict(),
            "replications": self.config.replications,
            "series": {
                sr.wrapper_label: {"terminal": sr.terminal_summary()}
                for sr in self.series.values()
            },
        }


def mean_se(x: np.ndarray) -> Tuple[float, float]:
    """Sample mean and standard error; SE is 0.0 for a single replication."""
    x = np.asarray(x, dtype=np.float64)
    mean = float(x.mean())
    if len(x) < 2:
        return mean, 0.0
    return mean, float(x.std(ddof=1) / math.sqrt(len(x)))


def _rep_payload(cfg: ExperimentConfig, rep: int) -> dict:
    """Recorded matrices and terminals for one replication (worker task)."""
    _, base, wrapped = simulate_pair(cfg, rep)
    idx = recorded_steps(len(base.v), cfg.record_stride)
    out = {"idx": idx, "base": _series_slice(base, None, idx, cfg.weights)}
    if wrapped is not None:
        out["wrapped"] = _series_slice(wrapped, base, idx, cfg.weights)
    return out


def _series_slice(trace: RunTrace, base: Optional[RunTrace], idx: np.ndarray,
                  weights: RegretWeights) -> dict:
    r_clamped = np.maximum(1, trace.r[idx])
    nalt_clamped = np.maximum(1, trace.n_alt[idx])
    div = (trace.s - base.s)[idx] if base is not None else np.zeros(len(idx), dtype=np.int64)
    last = idx[-1]
    return {
        "fdp": trace.v[idx] / r_clamped,
        "power": trace.s[idx] / nalt_clamped,
        "regret": weights.a * trace.v[idx] + weights.b * trace.m[idx],
        "dividend": div.astype(np.float64),
        "lambda_base": trace.lambda_base[idx],
        "lambda_actual": trace.lambda_actual[idx],
        "V": trace.v[idx], "S": trace.s[idx], "M": trace.m[idx], "R": trace.r[idx],
        "terminal": {
            "V": float(trace.v[last]), "S": float(trace.s[last]),
            "M": float(trace.m[last]), "R": float(trace.r[last]),
            "fdp": float(trace.v[last] / max(1, trace.r[last])),
            "power": float(trace.s[last] / max(1, trace.n_alt[last])),
            "regret": float(weights.a * trace.v[last] + weights.b * trace.m[last]),
            "dividend": float(div[-1]),
        },
    }


def resolve_workers(cfg_workers: int) -> int:
    env = os.environ.get("DOMT_WORKERS")
    if env is not None:
        try:
            w = int(env)
        except ValueError as exc:
            raise ValueError(f"DOMT_WORKERS must be an integer, got {env!r}") from exc
        if w < 1:
            raise ValueError(f"DOMT_WORKERS must be >= 1, got {w}")
        return w
    return cfg_workers


def _collect_payloads(cfg: ExperimentConfig, reps: Sequence[int]) -> List[dict]:
    workers = resolve_workers(cfg.workers)
    if workers == 1 or len(reps) <= 1:
        return [_rep_payload(cfg, r) for r in reps]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunk = max(1, len(reps) // (4 * workers))
        return list(pool.map(_rep_payload, [cfg] * len(reps), reps, chunksize=chunk))


def run_experiment(cfg: ExperimentConfig) -> ExperimentResult:
    payloads = _collect_payloads(cfg, range(cfg.replications))
    idx = payloads[0]["idx"]
    ts = idx + 1
    series: Dict[str, SeriesResult] = {}
    names = ["base"] + (["wrapped"] if cfg.wrapper != "none" else [])
    for name in names:
        label = "none" if name == "base" else cfg.wrapper
        stack = lambda key: np.stack([p[name][key] for p in payloads])
        terminal = {
            key: np.array([p[name]["terminal"][key] for p in payloads])
            for key in ("V", "S", "M", "R", "fdp", "power", "regret", "dividend")
        }
        series[name] = SeriesResult(
            wrapper_label=label, ts=ts,
            fdp=stack("fdp"), power=stack("power"), regret=stack("regret"),
            dividend=stack("dividend"), lambda_base=stack("lambda_base"),
            lambda_actual=stack("lambda_actual"),
            counts={k: stack(k) for k in ("V", "S", "M", "R")},
            terminal=terminal,
        )
    return ExperimentResult(config=cfg, series=series)


# ---------------------------------------------------------------------------
# phase-map sweep and pareto scans


@dataclass(frozen=True)
class SweepCell:
    rho: float
    b_over_a: float
    mean_diff: float  # mean(regret_base - regret_wrapped)
    se_diff: float
    domt_wins: bool   # mean positive beyond 2 SE
    tax: float        # theoretical boundary, NaN when the alt has no slope


@dataclass
class SweepResult:
    config: ExperimentConfig
    cells: List[SweepCell]


def sweep_phase_map(cfg: ExperimentConfig, rhos: Sequence[float],
                    ratios: Sequence[float]) -> SweepResult:
    """Regret-difference phase map over (rho, b/a).

    One batch of paired replications is run per rho (the burst onset moves);
    every b/a cell reuses those paths, which is exact because regret is linear
    in the weights given per-path counts.
    """
    if not isinstance(cfg.env, Bursty):
        raise ValueError("phase-map sweep needs a bursty environment")
    if cfg.wrapper == "none":
        raise ValueError("phase-map sweep needs a wrapper variant to compare against")
    cells: List[SweepCell] = []
    for i, rho in enumerate(sorted(rhos)):
        t0 = int(round(rho * cfg.env.t))
        env = replace(cfg.env, t0=t0)
        rho_cfg = replace(cfg, env=env)
        base_rep = i * cfg.replications
        payloads = _collect_payloads(rho_cfg, range(base_rep, base_rep + cfg.replications))
        vb = np.array([p["base"]["terminal"]["V"] for p in payloads])
        mb = np.array([p["base"]["terminal"]["M"] for p in payloads])
        vw = np.array([p["wrapped"]["terminal"]["V"] for p in payloads])
        mw = np.array([p["wrapped"]["terminal"]["M"] for p in payloads])
        tax = math.nan
        if isinstance(cfg.env.alt, LinearDetectability):
            tax = cold_start_tax(BurstyParams(pi=cfg.env.pi_post,
                                              mu=cfg.env.alt.slope, rho=rho))
        for ratio in ratios:
            b = ratio * cfg.a
            diffs = cfg.a * (vb - vw) + b * (mb - mw)
            mean, se = mean_se(diffs)
            cells.append(SweepCell(rho=rho, b_over_a=ratio, mean_diff=mean,
                                   se_diff=se, domt_wins=mean - 2.0 * se > 0.0,
                                   tax=tax))
    return SweepResult(config=cfg, cells=cells)


@dataclass(frozen=True)
class ParetoPoint:
    label: str
    procedure: str
    wrapper: str
    kappa: float
    mean_v_base: float
    mean_m_base: float
    mean_v: float
    mean_m: float
    se_v: float
    se_m: float


def pareto_points(cfgs: Sequence[ExperimentConfig]) -> List[ParetoPoint]:
    """Terminal (V, M) operating points, one per config, paired with their base."""
    points = []
    for cfg in cfgs:
        res = run_experiment(cfg)
        base = res.series["base"]
        wrapped = res.series.get("wrapped", base)
        mv, sv = mean_se(wrapped.terminal["V"])
        mm, sm = mean_se(wrapped.terminal["M"])
        mvb, _ = mean_se(base.terminal["V"])
        mmb, _ = mean_se(base.terminal["M"])
        kappa = cfg.kappa if cfg.wrapper != "none" else 0.0
        label = f"{cfg.procedure}-{cfg.wrapper}-k{kappa:g}"
        points.append(ParetoPoint(label=label, procedure=cfg.procedure,
                                  wrapper=cfg.wrapper, kappa=kappa,
                                  mean_v_base=mvb, mean_m_base=mmb,
                                  mean_v=mv, mean_m=mm, se_v=sv, se_m=sm))
    return points


# ---------------------------------------------------------------------------
# ingestion (lazy, decision-only unless the file carries truth labels)


def run_ingest(source: FileSource, cfg: ExperimentConfig, out_path: str) -> dict:
    """Stream a p-value file through one wrapped run, writing one row per decision.

    Memory use is independent of file size. Returns a summary dict with
    rejection counts (and confusion counts when the file has truth labels).
    """
    proc = make_procedure(cfg.procedure, alpha=cfg.alpha, w0=cfg.w0,
                          lambda_cand=cfg.lambda_cand, tau_disc=cfg.tau_disc,
                          kappa_calibrator=cfg.kappa_calibrator)
    noise = None
    if cfg.wrapper in ("domt", "cr"):
        noise = RngState(derive(cfg.seed, 0, _NOISE_CHANNEL))
    wp = WrappedProcedure(proc, DomtConfig(cfg.wrapper, cfg.kappa), noise)
    n = rejections = base_rejections = 0
    v = s = n_alt = 0
    labeled = source.truth_col is not None
    os.makedirs(os.path.dirname(out_path) or ".", exist_ok=True)
    with _atomic_writer(out_path) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        header = ["t", "p_value", "lambda_base", "xi", "lambda_actual",
                  "delta_base", "delta_actual"]
        if labeled:
            header.append("truth")
        writer.writerow(header)
        for item in iter_pvalue_file(source):
            lam_base, xi, lam_actual, db, da = wp.step_values(item.p_value)
            n += 1
            rejections += da
            base_rejections += db
            row = [item.t, _fmt(item.p_value), _fmt(lam_base), _fmt(xi),
                   _fmt(lam_actual), int(db), int(da)]
            if labeled:
                row.append(item.truth)
                n_alt += item.truth
                if da:
                    if item.truth:
                        s += 1
                    else:
                        v += 1
            writer.writerow(row)
    summary = {
        "version": VERSION_STRING,
        "n": n,
        "rejections": int(rejections),
        "base_rejections": int(base_rejections),
        "procedure": cfg.procedure,
        "wrapper": cfg.wrapper,
        "kappa": cfg.kappa,
    }
    if labeled:
        summary.update({"V": v, "S": s, "M": n_alt - s, "n_alt": n_alt,
                        "fdp": v / max(1, v + s), "power": s / max(1, n_alt)})
    return summary


# ---------------------------------------------------------------------------
# writers


class _atomic_writer:
    """Context manager: write to a temp file, rename into place on success."""

    def __init__(self, path: str):
        self.path = path
        self._fh = None
        self._tmp = None

    def __enter__(self):
        d = os.path.dirname(self.path) or "."
        fd, self._tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", text=True)
        self._fh = os.fdopen(fd, "w", encoding="utf-8", newline="")
        return self._fh

    def __exit__(self, exc_type, exc, tb):
        self._fh.close()
        if exc_type is None:
            os.replace(self._tmp, self.path)
        else:
            os.unlink(self._tmp)
        return False


def _fmt(x) -> str:
    """Shortest round-trip decimal for a float; byte-stable across runs."""
    return repr(float(x))


def write_outputs(result: ExperimentResult, outdir: str, prefix: str = "") -> Dict[str, str]:
    """Write trajectory CSV and summary JSON; returns the paths."""
    os.makedirs(outdir, exist_ok=True)
    traj_path = os.path.join(outdir, f"{prefix}trajectory.csv")
    summary_path = os.path.join(outdir, f"{prefix}summary.json")
    cfg = result.config
    with _atomic_writer(traj_path) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(TRAJECTORY_COLUMNS)
        order = [k for k in ("base", "wrapped") if k in result.series]
        nrec = len(result.series["base"].ts)
        for rep in range(cfg.replications):
            for name in order:
                sr = result.series[name]
                for j in range(nrec):
                    writer.writerow([
                        rep, int(sr.ts[j]), cfg.procedure, sr.wrapper_label,
                        int(sr.counts["V"][rep, j]), int(sr.counts["S"][rep, j]),
                        int(sr.counts["M"][rep, j]), int(sr.counts["R"][rep, j]),
                        _fmt(sr.fdp[rep, j]), _fmt(sr.power[rep, j]),
                        _fmt(sr.regret[rep, j]), _fmt(sr.lambda_base[rep, j]),
                        _fmt(sr.lambda_actual[rep, j]), int(sr.dividend[rep, j]),
                    ])
    with _atomic_writer(summary_path) as fh:
        json.dump(result.summary_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    return {"trajectory": traj_path, "summary": summary_path}


def write_sweep(result: SweepResult, outdir: str) -> Dict[str, str]:
    os.makedirs(outdir, exist_ok=True)
    csv_path = os.path.join(outdir, "sweep.csv")
    json_path = os.path.join(outdir, "sweep_summary.json")
    with _atomic_writer(csv_path) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["rho", "b_over_a", "mean_diff", "se_diff", "domt_wins", "tax"])
        for c in result.cells:
            writer.writerow([_fmt(c.rho), _fmt(c.b_over_a), _fmt(c.mean_diff),
                             _fmt(c.se_diff), int(c.domt_wins),
                             "" if math.isnan(c.tax) else _fmt(c.tax)])
    with _atomic_writer(json_path) as fh:
        json.dump({"version": VERSION_STRING, "config": result.config.to_dict(),
                   "cells": len(result.cells)}, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return {"sweep": csv_path, "summary": json_path}


def write_pareto(points: Sequence[ParetoPoint], outdir: str,
                 config: Optional[ExperimentConfig] = None) -> Dict[str, str]:
    os.makedirs(outdir, exist_ok=True)
    csv_path = os.path.join(outdir, "pareto.csv")
    json_path = os.path.join(outdir, "pareto_summary.json")
    with _atomic_writer(csv_path) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["label", "procedure", "wrapper", "kappa",
                         "mean_V_base", "mean_M_base", "mean_V", "mean_M",
                         "se_V", "se_M"])
        for p in points:
            writer.writerow([p.label, p.procedure, p.wrapper, _fmt(p.kappa),
                             _fmt(p.mean_v_base), _fmt(p.mean_m_base),
                             _fmt(p.mean_v), _fmt(p.mean_m),
                             _fmt(p.se_v), _fmt(p.se_m)])
    payload = {"version": VERSION_STRING, "points": len(points)}
    if config is not None:
        payload["config"] = config.to_dict()
    with _atomic_writer(json_path) as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return {"pareto": csv_path, "summary": json_path}
