import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domtsim.core import RegretWeights
from domtsim.environments import Bursty
from domtsim.harness import ExperimentConfig, run_experiment
from domtsim.metrics import (TRAJECTORY_COLUMNS, ConfusionCounters, dividend,
                             fdp, power, regret, update_counters)
from domtsim.sampling import LinearDetectability


def test_trajectory_schema_is_frozen():
    assert TRAJECTORY_COLUMNS == (
        "run_id", "t", "procedure", "wrapper", "V", "S", "M", "R",
        "fdp", "power", "regret", "lambda_base", "lambda_actual", "dividend")


def test_empty_counters_have_safe_ratios():
    c = ConfusionCounters()
    assert fdp(c) == 0.0
    assert power(c) == 0.0
    assert c.r == 0


def test_update_tracks_the_four_cells():
    c = ConfusionCounters()
    update_counters(c, truth=0, decision=True)   # false rejection
    update_counters(c, truth=1, decision=True)   # true rejection
    update_counters(c, truth=1, decision=False)  # miss
    update_counters(c, truth=0, decision=False)  # correct accept
    assert (c.v, c.s, c.m, c.n_alt, c.t) == (1, 1, 1, 2, 4)
    assert c.r == 2
    assert fdp(c) == pytest.approx(0.5)
    assert power(c) == pytest.approx(0.5)
    assert regret(c, RegretWeights(2.0, 3.0)) == pytest.approx(2.0 + 3.0)


def test_update_rejects_unlabeled_truth():
    with pytest.raises(ValueError):
        update_counters(ConfusionCounters(), truth=None, decision=True)


@settings(max_examples=40, deadline=None)
@given(steps=st.lists(st.tuples(st.integers(0, 1), st.booleans()),
                      min_size=0, max_size=200))
def test_counter_conservation_laws(steps):
    """V + S = R and S + M = number of alternatives, always."""
    c = ConfusionCounters()
    for truth, decision in steps:
        update_counters(c, truth, decision)
    assert c.v + c.s == c.r
    assert c.s + c.m == c.n_alt
    assert c.t == len(steps)
    assert 0.0 <= fdp(c) <= 1.0
    assert 0.0 <= power(c) <= 1.0


def test_dividend_needs_paired_counters():
    a = ConfusionCounters(t=5, s=2)
    b = ConfusionCounters(t=5, s=3)
    assert dividend(a, b) == 1
    with pytest.raises(ValueError):
        dividend(ConfusionCounters(t=4), ConfusionCounters(t=5))


def test_burst_discovery_dividend_is_positive_for_most_seeds():
    """After a long null prefix, exploration finds the burst much earlier."""
    env = Bursty(t=2000, t0=1000, pi_post=0.2, alt=LinearDetectability(5.0))
    cfg = ExperimentConfig(env=env, procedure="lond", wrapper="domt",
                           kappa=8.0, seed=1234, replications=200,
                           record_stride=2000)
    res = run_experiment(cfg)
    div = res.series["wrapped"].terminal["dividend"]
    assert float(np.mean(div > 0)) >= 0.95
    assert div.mean() > 10
