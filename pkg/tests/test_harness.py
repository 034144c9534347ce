import json
import math
import os

import numpy as np
import pytest

from domtsim.environments import (Bursty, Drought, FileSource, Stationary,
                                  TwoPhase)
from domtsim.harness import (ExperimentConfig, mean_se, pareto_points,
                             recorded_steps, resolve_workers, run_experiment,
                             run_ingest, simulate_run, sweep_phase_map,
                             write_outputs, write_pareto, write_sweep)
from domtsim.metrics import TRAJECTORY_COLUMNS
from domtsim.sampling import BetaAlt, LinearDetectability, RngState, derive
from domtsim.environments import Stream, generate


SMALL = ExperimentConfig(env=Stationary(t=120), procedure="lond", seed=11,
                         replications=3, record_stride=25)


def test_config_round_trips_through_a_plain_dict():
    cfgs = [
        SMALL,
        ExperimentConfig(env=Bursty(t=400, t0=100, pi_post=0.3,
                                    alt=LinearDetectability(4.0)),
                         procedure="saffron", wrapper="cr", kappa=1.5,
                         a=2.0, b=0.5, replications=2),
        ExperimentConfig(env=TwoPhase(t=200), procedure="addis", tau_disc=0.6,
                         lambda_cand=0.2),
        ExperimentConfig(env=Drought(t=300, t0=50, k=100, pi0=0.9)),
        ExperimentConfig(env=FileSource("pv.csv", p_col=1, truth_col=0,
                                        has_header=True), wrapper="none"),
    ]
    for cfg in cfgs:
        d = cfg.to_dict()
        assert json.loads(json.dumps(d)) == d  # JSON-safe
        assert ExperimentConfig.from_dict(d) == cfg


def test_from_dict_rejects_unknown_keys():
    with pytest.raises(ValueError, match="unknown config keys"):
        ExperimentConfig.from_dict({"procedure": "lond", "typo": 1})
    with pytest.raises(ValueError, match="alt"):
        ExperimentConfig.from_dict({"alt": {"kind": "cauchy"}})
    with pytest.raises(ValueError, match="does not accept"):
        ExperimentConfig.from_dict({"env": "stationary", "t0": 5})
    with pytest.raises(ValueError, match="file.path"):
        ExperimentConfig.from_dict({"env": "file"})


def test_from_dict_defaults_to_the_stationary_protocol():
    cfg = ExperimentConfig.from_dict({})
    assert isinstance(cfg.env, Stationary)
    assert cfg.env.t == 5000
    assert cfg.procedure == "lond"
    assert cfg.wrapper == "domt"


def test_config_validates_names_and_counts():
    with pytest.raises(ValueError):
        ExperimentConfig(procedure="fisher")
    with pytest.raises(ValueError):
        ExperimentConfig(wrapper="bootstrap")
    with pytest.raises(ValueError):
        ExperimentConfig(replications=0)
    with pytest.raises(ValueError):
        ExperimentConfig(record_stride=0)
    with pytest.raises(ValueError):
        ExperimentConfig(a=-1.0)


def test_recorded_steps_hit_every_stride_and_the_end():
    assert recorded_steps(100, 10).tolist() == [9, 19, 29, 39, 49, 59, 69, 79, 89, 99]
    assert recorded_steps(105, 10).tolist()[-2:] == [99, 104]
    assert recorded_steps(5, 10).tolist() == [4]
    assert recorded_steps(1, 1).tolist() == [0]


def test_mean_se_for_single_and_many():
    m, se = mean_se(np.array([3.0]))
    assert (m, se) == (3.0, 0.0)
    m, se = mean_se(np.array([1.0, 3.0]))
    assert m == 2.0
    assert se == pytest.approx(math.sqrt(2.0) / math.sqrt(2.0))


def test_simulate_run_refuses_unlabeled_streams():
    stream = Stream(np.array([0.5, 0.5]), None)
    with pytest.raises(ValueError, match="labeled"):
        simulate_run(stream, SMALL, "none", None)


def test_rerun_is_byte_identical(tmp_path):
    res1 = run_experiment(SMALL)
    res2 = run_experiment(SMALL)
    p1 = write_outputs(res1, str(tmp_path / "a"))
    p2 = write_outputs(res2, str(tmp_path / "b"))
    for key in ("trajectory", "summary"):
        assert open(p1[key], "rb").read() == open(p2[key], "rb").read()


def test_base_series_does_not_depend_on_the_wrapper_setting():
    r3 = run_experiment(ExperimentConfig(env=Stationary(t=200), seed=5,
                                         replications=4, kappa=3.0))
    r8 = run_experiment(ExperimentConfig(env=Stationary(t=200), seed=5,
                                         replications=4, kappa=8.0))
    assert np.array_equal(r3.series["base"].lambda_base,
                          r8.series["base"].lambda_base)
    assert np.array_equal(r3.series["base"].terminal["R"],
                          r8.series["base"].terminal["R"])
    assert not np.array_equal(r3.series["wrapped"].terminal["R"],
                              r8.series["wrapped"].terminal["R"])


def test_trajectory_file_shape_and_schema(tmp_path):
    cfg = ExperimentConfig(env=Stationary(t=105), seed=2, replications=3,
                           record_stride=10)
    paths = write_outputs(run_experiment(cfg), str(tmp_path))
    lines = open(paths["trajectory"]).read().splitlines()
    assert lines[0] == ",".join(TRAJECTORY_COLUMNS)
    nrec = 11  # t = 10..100 by tens, plus the terminal 105
    assert len(lines) == 1 + cfg.replications * 2 * nrec
    first = lines[1].split(",")
    assert first[0] == "0" and first[1] == "10"
    assert first[3] == "none"
    summary = json.load(open(paths["summary"]))
    assert summary["version"].startswith("artifact-")
    assert ExperimentConfig.from_dict(summary["config"]) == cfg
    assert set(summary["series"]) == {"none", "domt"}


def test_bare_wrapper_writes_a_single_series(tmp_path):
    cfg = ExperimentConfig(env=Stationary(t=50), wrapper="none",
                           replications=2, record_stride=50)
    res = run_experiment(cfg)
    assert list(res.series) == ["base"]
    paths = write_outputs(res, str(tmp_path))
    lines = open(paths["trajectory"]).read().splitlines()
    assert len(lines) == 1 + 2 * 1


def test_dividend_column_is_zero_for_the_base_series():
    res = run_experiment(SMALL)
    assert np.all(res.series["base"].dividend == 0)


def test_pareto_points_report_paired_arrows():
    base_cfg = ExperimentConfig(env=Stationary(t=400, pi0=0.9), seed=21,
                                replications=30, record_stride=400)
    from dataclasses import replace
    cfgs = [replace(base_cfg, kappa=k) for k in (0.5, 8.0)]
    pts = pareto_points(cfgs)
    assert [p.kappa for p in pts] == [0.5, 8.0]
    for p in pts:
        assert p.mean_v >= p.mean_v_base
        assert p.mean_m <= p.mean_m_base
    # stronger exploration buys strictly more false rejections on average
    assert pts[1].mean_v > pts[0].mean_v
    labels = {p.label for p in pts}
    assert labels == {"lond-domt-k0.5", "lond-domt-k8"}


def test_pareto_with_bare_wrapper_collapses_to_the_base_point():
    cfg = ExperimentConfig(env=Stationary(t=200), wrapper="none",
                           replications=5, record_stride=200)
    (pt,) = pareto_points([cfg])
    assert pt.mean_v == pt.mean_v_base
    assert pt.mean_m == pt.mean_m_base


def test_sweep_grid_is_linear_in_the_miss_weight():
    env = Bursty(t=600, t0=0, pi_post=0.8, alt=LinearDetectability(5.0))
    cfg = ExperimentConfig(env=env, procedure="lond", kappa=3.0, seed=31,
                           replications=12, record_stride=600)
    res = sweep_phase_map(cfg, rhos=[0.25, 0.5], ratios=[0.1, 1.0, 10.0])
    assert len(res.cells) == 6
    taxes = {0.25: 1.8, 0.5: 3.2142135623730951}
    for rho in (0.25, 0.5):
        cells = [c for c in res.cells if c.rho == rho]
        diffs = [c.mean_diff for c in cells]
        assert diffs == sorted(diffs)
        for c in cells:
            assert c.domt_wins == (c.mean_diff - 2 * c.se_diff > 0)
            assert c.tax == pytest.approx(taxes[rho], rel=1e-12)


def test_sweep_tax_is_nan_without_a_detectability_slope():
    env = Bursty(t=200, t0=0, pi_post=0.5, alt=BetaAlt(0.3, 15.0))
    cfg = ExperimentConfig(env=env, replications=3, record_stride=200)
    res = sweep_phase_map(cfg, rhos=[0.5], ratios=[1.0])
    assert math.isnan(res.cells[0].tax)


def test_sweep_requires_a_bursty_environment_and_a_wrapper():
    with pytest.raises(ValueError):
        sweep_phase_map(SMALL, rhos=[0.5], ratios=[1.0])
    env = Bursty(t=200, t0=0)
    with pytest.raises(ValueError):
        sweep_phase_map(ExperimentConfig(env=env, wrapper="none"),
                        rhos=[0.5], ratios=[1.0])


def test_sweep_and_pareto_files_are_written(tmp_path):
    env = Bursty(t=200, t0=0, pi_post=0.5, alt=LinearDetectability(5.0))
    cfg = ExperimentConfig(env=env, replications=3, record_stride=200)
    sw = sweep_phase_map(cfg, rhos=[0.5], ratios=[1.0, 2.0])
    paths = write_sweep(sw, str(tmp_path))
    lines = open(paths["sweep"]).read().splitlines()
    assert lines[0] == "rho,b_over_a,mean_diff,se_diff,domt_wins,tax"
    assert len(lines) == 3
    pts = pareto_points([SMALL])
    ppaths = write_pareto(pts, str(tmp_path), config=SMALL)
    plines = open(ppaths["pareto"]).read().splitlines()
    assert plines[0].startswith("label,procedure,wrapper,kappa")
    assert len(plines) == 2


def test_worker_count_env_override(monkeypatch):
    monkeypatch.delenv("DOMT_WORKERS", raising=False)
    assert resolve_workers(3) == 3
    monkeypatch.setenv("DOMT_WORKERS", "5")
    assert resolve_workers(3) == 5
    monkeypatch.setenv("DOMT_WORKERS", "zero")
    with pytest.raises(ValueError):
        resolve_workers(3)
    monkeypatch.setenv("DOMT_WORKERS", "0")
    with pytest.raises(ValueError):
        resolve_workers(3)


def test_parallel_run_matches_serial_run(monkeypatch):
    monkeypatch.delenv("DOMT_WORKERS", raising=False)
    from dataclasses import replace
    serial = run_experiment(SMALL)
    parallel = run_experiment(replace(SMALL, workers=2))
    assert serial.summary_dict()["series"] == parallel.summary_dict()["series"]
    assert np.array_equal(serial.series["wrapped"].lambda_actual,
                          parallel.series["wrapped"].lambda_actual)
    assert np.array_equal(serial.series["base"].fdp, parallel.series["base"].fdp)


def test_ingest_writes_decisions_and_counts(tmp_path):
    src = tmp_path / "pv.csv"
    src.write_text("0.0001,1\n0.9,0\n0.2,0\n0.00001,1\n")
    out = tmp_path / "decisions.csv"
    source = FileSource(str(src), truth_col=1)
    cfg = ExperimentConfig(env=source, procedure="lond", wrapper="domt", seed=4)
    summary = run_ingest(source, cfg, str(out))
    lines = open(out).read().splitlines()
    assert lines[0].split(",")[:3] == ["t", "p_value", "lambda_base"]
    assert len(lines) == 5
    assert summary["n"] == 4
    assert summary["n_alt"] == 2
    assert summary["rejections"] >= summary["base_rejections"]
    assert 0.0 <= summary["fdp"] <= 1.0


def test_ingest_without_labels_reports_only_counts(tmp_path):
    src = tmp_path / "pv.csv"
    src.write_text("0.5\n0.001\n")
    source = FileSource(str(src))
    cfg = ExperimentConfig(env=source, wrapper="none")
    summary = run_ingest(source, cfg, str(tmp_path / "d.csv"))
    assert summary["n"] == 2
    assert "fdp" not in summary
    header = open(tmp_path / "d.csv").read().splitlines()[0]
    assert "truth" not in header
