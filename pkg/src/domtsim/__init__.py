"""Online multiple testing with randomized threshold exploration.

Deterministic alpha-investing style procedures, a stochastic wrapper that
perturbs their thresholds without contaminating their internal state, and a
paired Monte-Carlo harness for measuring what the perturbation buys and costs.
"""

__version__ = "0.1.0"

from .core import (GAMMA, DecisionRecord, GammaSequence, RegretWeights,
                   StreamItem, gamma, weighted_regret)
from .domt import VARIANTS, DomtConfig, WrappedProcedure, exploration_amplitude
from .environments import (Bursty, Drought, FileSource, Stationary, Stream,
                           TwoPhase, generate, iter_pvalue_file)
from .harness import (ExperimentConfig, ExperimentResult, ParetoPoint,
                      RunTrace, SweepCell, SweepResult, pareto_points,
                      recorded_steps, run_experiment, run_ingest,
                      simulate_pair, simulate_run, sweep_phase_map,
                      write_outputs, write_pareto, write_sweep)
from .metrics import (TRAJECTORY_COLUMNS, ConfusionCounters, dividend, fdp,
                      power, regret, update_counters)
from .procedures import (PROCEDURES, Addis, ELond, Lond, LordPlusPlus,
                         Procedure, Saffron, e_value, make_procedure)
from .sampling import (BetaAlt, LinearDetectability, RngState, derive,
                       gamma_variate, sample_alt, uniform01)
from .theory import (BurstyParams, cold_start_tax, critical_constants,
                     drought_threshold_ratio, extra_fp_budget,
                     fdp_inflation_term, regret_gap_bound)

__all__ = [
    "__version__",
    "GAMMA", "GammaSequence", "gamma", "StreamItem", "RegretWeights",
    "weighted_regret", "DecisionRecord",
    "PROCEDURES", "Procedure", "Lond", "ELond", "LordPlusPlus", "Saffron",
    "Addis", "e_value", "make_procedure",
    "VARIANTS", "DomtConfig", "WrappedProcedure", "exploration_amplitude",
    "Stationary", "Bursty", "TwoPhase", "Drought", "FileSource", "Stream",
    "generate", "iter_pvalue_file",
    "TRAJECTORY_COLUMNS", "ConfusionCounters", "update_counters", "fdp",
    "power", "regret", "dividend",
    "BurstyParams", "cold_start_tax", "critical_constants",
    "fdp_inflation_term", "regret_gap_bound", "drought_threshold_ratio",
    "extra_fp_budget",
    "RngState", "derive", "uniform01", "BetaAlt", "LinearDetectability",
    "gamma_variate", "sample_alt",
    "ExperimentConfig", "ExperimentResult", "RunTrace", "SweepCell",
    "SweepResult", "ParetoPoint", "simulate_run", "simulate_pair",
    "recorded_steps", "run_experiment", "sweep_phase_map", "pareto_points",
    "run_ingest", "write_outputs", "write_sweep", "write_pareto",
]
