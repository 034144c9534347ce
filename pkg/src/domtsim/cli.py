"""Command-line front end.

Exit codes: 0 on success, 1 for usage or configuration problems (bad flags,
unreadable or invalid config files), 2 for failures while running (bad input
rows, write errors). Flag values override config-file values, which override
the built-in defaults.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from typing import List, Optional, Sequence

import yaml

from . import __version__
from .environments import Bursty, FileSource
from .harness import (ExperimentConfig, pareto_points, run_experiment,
                      run_ingest, sweep_phase_map, write_outputs, write_pareto,
                      write_sweep)
from .theory import (BurstyParams, cold_start_tax, critical_constants,
                     drought_threshold_ratio, extra_fp_budget,
                     fdp_inflation_term, regret_gap_bound)

_SCALAR_KEYS = ("procedure", "alpha", "w0", "lambda_cand", "tau_disc",
                "kappa_calibrator", "wrapper", "kappa", "a", "b", "seed",
                "replications", "record_stride", "workers",
                "env", "t", "t0", "k", "pi0", "pi_post")


def _float_list(text: str) -> List[float]:
    try:
        vals = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("expected at least one number")
    return vals


def _str_list(text: str) -> List[str]:
    vals = [x.strip() for x in text.split(",") if x.strip()]
    if not vals:
        raise argparse.ArgumentTypeError("expected at least one name")
    return vals


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="YAML config file; flags override its values")
    p.add_argument("--procedure", choices=("lond", "lord", "saffron", "addis", "elond"))
    p.add_argument("--alpha", type=float)
    p.add_argument("--w0", type=float)
    p.add_argument("--lambda-cand", dest="lambda_cand", type=float)
    p.add_argument("--tau-disc", dest="tau_disc", type=float)
    p.add_argument("--kappa-calibrator", dest="kappa_calibrator", type=float)
    p.add_argument("--wrapper", choices=("none", "domt", "cr", "det_offset"))
    p.add_argument("--kappa", type=float)
    p.add_argument("--a", type=float, help="false-rejection weight in the regret")
    p.add_argument("--b", type=float, help="miss weight in the regret")
    p.add_argument("--seed", type=int)
    p.add_argument("--replications", type=int)
    p.add_argument("--record-stride", dest="record_stride", type=int)
    p.add_argument("--workers", type=int)


def _env_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--env", choices=("stationary", "bursty", "two_phase", "drought"))
    p.add_argument("--t", type=int, help="stream length")
    p.add_argument("--t0", type=int, help="phase-change step (bursty/drought)")
    p.add_argument("--k", type=int, help="drought length")
    p.add_argument("--pi0", type=float, help="null fraction (stationary/drought)")
    p.add_argument("--pi-post", dest="pi_post", type=float,
                   help="post-onset null fraction (bursty)")
    p.add_argument("--alt-kind", dest="alt_kind", choices=("beta", "linear"))
    p.add_argument("--alt-a", dest="alt_a", type=float)
    p.add_argument("--alt-b", dest="alt_b", type=float)
    p.add_argument("--alt-slope", dest="alt_slope", type=float)


def _load_config_file(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        raw = yaml.safe_load(fh)
    if raw is None:
        return {}
    if not isinstance(raw, dict):
        raise ValueError(f"{path}: config must be a mapping, got {type(raw).__name__}")
    return raw


def _config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    base = _load_config_file(args.config) if getattr(args, "config", None) else {}
    for key in _SCALAR_KEYS:
        val = getattr(args, key, None)
        if val is not None:
            base[key] = val
    alt_over = {name: getattr(args, f"alt_{name}", None)
                for name in ("kind", "a", "b", "slope")}
    alt_over = {k: v for k, v in alt_over.items() if v is not None}
    if alt_over:
        if "kind" in alt_over:
            base["alt"] = alt_over
        else:
            merged = dict(base.get("alt") or {})
            merged.update(alt_over)
            base["alt"] = merged
    return ExperimentConfig.from_dict(base)


def _fail_usage(exc: BaseException) -> int:
    print(f"config error: {exc}", file=sys.stderr)
    return 1


def _fail_runtime(exc: BaseException) -> int:
    print(f"error: {exc}", file=sys.stderr)
    return 2


def _cmd_run(args: argparse.Namespace) -> int:
    try:
        cfg = _config_from_args(args)
    except (ValueError, TypeError, OSError) as exc:
        return _fail_usage(exc)
    try:
        result = run_experiment(cfg)
        paths = write_outputs(result, args.outdir)
    except Exception as exc:
        return _fail_runtime(exc)
    for sr in result.series.values():
        term = sr.terminal_summary()
        print(f"{sr.wrapper_label}: fdp={term['fdp']['mean']:.6g} "
              f"power={term['power']['mean']:.6g} regret={term['regret']['mean']:.6g} "
              f"(n={cfg.replications})")
    print(f"wrote {paths['trajectory']} and {paths['summary']}")
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    try:
        cfg = _config_from_args(args)
        if not isinstance(cfg.env, Bursty):
            raise ValueError("sweep needs --env bursty (t0 is set per rho)")
    except (ValueError, TypeError, OSError) as exc:
        return _fail_usage(exc)
    try:
        result = sweep_phase_map(cfg, args.rhos, args.ratios)
        paths = write_sweep(result, args.outdir)
    except Exception as exc:
        return _fail_runtime(exc)
    wins = sum(c.domt_wins for c in result.cells)
    print(f"{len(result.cells)} cells, wrapper ahead in {wins}")
    print(f"wrote {paths['sweep']} and {paths['summary']}")
    return 0


def _cmd_pareto(args: argparse.Namespace) -> int:
    try:
        cfg = _config_from_args(args)
    except (ValueError, TypeError, OSError) as exc:
        return _fail_usage(exc)
    try:
        cfgs = []
        for proc in args.procedures:
            for wrapper in args.wrappers:
                kappas = args.kappas if wrapper != "none" else [0.0]
                for kappa in kappas:
                    cfgs.append(replace(cfg, procedure=proc, wrapper=wrapper,
                                        kappa=kappa))
        points = pareto_points(cfgs)
        paths = write_pareto(points, args.outdir, config=cfg)
    except Exception as exc:
        return _fail_runtime(exc)
    print(f"{len(points)} operating points")
    print(f"wrote {paths['pareto']} and {paths['summary']}")
    return 0


def _cmd_ablate(args: argparse.Namespace) -> int:
    try:
        cfg = _config_from_args(args)
        bad = [v for v in args.variants if v not in ("domt", "cr", "det_offset")]
        if bad:
            raise ValueError(f"unknown wrapper variants: {bad}")
    except (ValueError, TypeError, OSError) as exc:
        return _fail_usage(exc)
    try:
        combined = {}
        for variant in args.variants:
            result = run_experiment(replace(cfg, wrapper=variant))
            write_outputs(result, args.outdir, prefix=f"{variant}_")
            summary = result.summary_dict()
            combined.setdefault("none", summary["series"]["none"])
            combined[variant] = summary["series"][variant]
        out = {"version": summary["version"], "config": cfg.to_dict(),
               "series": combined}
        path = f"{args.outdir.rstrip('/')}/ablate_summary.json"
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(out, fh, indent=2, sort_keys=True)
            fh.write("\n")
    except Exception as exc:
        return _fail_runtime(exc)
    for name in ["none"] + list(args.variants):
        term = combined[name]["terminal"]
        print(f"{name}: fdp={term['fdp']['mean']:.6g} power={term['power']['mean']:.6g}")
    print(f"wrote per-variant trajectories and {path}")
    return 0


def _cmd_theory(args: argparse.Namespace) -> int:
    try:
        params = BurstyParams(pi=args.pi, mu=args.mu, rho=args.rho)
        c1, c2 = critical_constants(params)
        rows = [
            ("cold_start_tax", cold_start_tax(params)),
            ("critical_c1", c1),
            ("critical_c2", c2),
            ("fdp_inflation_term",
             fdp_inflation_term(args.t, args.kappa, args.alpha, args.delta,
                                args.rejections)),
            ("regret_gap_bound",
             regret_gap_bound(args.horizon, args.a, args.kappa, args.alpha)),
            ("drought_threshold_ratio",
             drought_threshold_ratio(args.lambda_base, args.t_drought,
                                     args.kappa, args.alpha)),
            ("extra_fp_budget",
             extra_fp_budget(args.horizon, args.kappa, args.alpha)),
        ]
    except (ValueError, TypeError) as exc:
        return _fail_usage(exc)
    for name, value in rows:
        print(f"{name} = {value:.6g}")
    return 0


def _cmd_ingest(args: argparse.Namespace) -> int:
    try:
        source = FileSource(path=args.file, p_col=args.p_col,
                            truth_col=args.truth_col, has_header=args.has_header)
        cfg = replace(_config_from_args(args), env=source, replications=1)
    except (ValueError, TypeError, OSError) as exc:
        return _fail_usage(exc)
    try:
        summary = run_ingest(source, cfg, args.out)
    except Exception as exc:
        return _fail_runtime(exc)
    print(json.dumps(summary, indent=2, sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domtsim",
        description="Online multiple testing simulator with threshold exploration.")
    parser.add_argument("--version", action="version",
                        version=f"domtsim {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="paired Monte-Carlo run; writes trajectory CSV")
    _common_flags(p_run)
    _env_flags(p_run)
    p_run.add_argument("--outdir", default="out")
    p_run.set_defaults(func=_cmd_run)

    p_sweep = sub.add_parser("sweep", help="regret phase map over (rho, b/a)")
    _common_flags(p_sweep)
    _env_flags(p_sweep)
    p_sweep.add_argument("--rhos", type=_float_list, default=[0.25, 0.5])
    p_sweep.add_argument("--ratios", type=_float_list,
                         default=[float(f"{10 ** (-1 + 3 * i / 12):.12g}") for i in range(13)])
    p_sweep.add_argument("--outdir", default="out")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_par = sub.add_parser("pareto", help="terminal (V, M) points over a config grid")
    _common_flags(p_par)
    _env_flags(p_par)
    p_par.add_argument("--procedures", type=_str_list, default=["lond", "lord", "saffron"])
    p_par.add_argument("--wrappers", type=_str_list, default=["domt"])
    p_par.add_argument("--kappas", type=_float_list, default=[0.5, 1.0, 3.0, 8.0])
    p_par.add_argument("--outdir", default="out")
    p_par.set_defaults(func=_cmd_pareto)

    p_abl = sub.add_parser("ablate", help="same streams under each wrapper variant")
    _common_flags(p_abl)
    _env_flags(p_abl)
    p_abl.add_argument("--variants", type=_str_list, default=["domt", "cr", "det_offset"])
    p_abl.add_argument("--outdir", default="out")
    p_abl.set_defaults(func=_cmd_ablate)

    p_thy = sub.add_parser("theory", help="closed-form reference quantities")
    p_thy.add_argument("--pi", type=float, default=0.8)
    p_thy.add_argument("--mu", type=float, default=5.0)
    p_thy.add_argument("--rho", type=float, default=0.25)
    p_thy.add_argument("--t", type=int, default=100)
    p_thy.add_argument("--kappa", type=float, default=3.0)
    p_thy.add_argument("--alpha", type=float, default=0.05)
    p_thy.add_argument("--delta", type=float, default=0.05)
    p_thy.add_argument("--rejections", type=int, default=10)
    p_thy.add_argument("--horizon", type=int, default=10000)
    p_thy.add_argument("--a", type=float, default=1.0)
    p_thy.add_argument("--lambda-base", dest="lambda_base", type=float, default=0.001)
    p_thy.add_argument("--t-drought", dest="t_drought", type=int, default=10000)
    p_thy.set_defaults(func=_cmd_theory)

    p_ing = sub.add_parser("ingest", help="stream a p-value file through one run")
    _common_flags(p_ing)
    p_ing.add_argument("file", help="CSV or whitespace-delimited p-value file")
    p_ing.add_argument("--p-col", dest="p_col", type=int, default=0)
    p_ing.add_argument("--truth-col", dest="truth_col", type=int, default=None)
    p_ing.add_argument("--has-header", dest="has_header", action="store_true")
    p_ing.add_argument("--out", default="decisions.csv")
    p_ing.set_defaults(func=_cmd_ingest)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
