"""Generate the CSV/JSON inputs the figure package renders and tests against.

Three families, one per figure kind: a stationary trajectory run for the
dynamics panels, a bursty regret sweep for the phase map, and a kappa sweep
for the pareto scatter. Outputs land in plotkit/test/fixtures/ by default so
the figure package's test suite exercises real harness output, not synthetic
stubs. Rerunning with the same seeds reproduces the files byte for byte.
"""

import argparse
import pathlib
import sys

import numpy as np

from domtsim.environments import Bursty, LinearDetectability
from domtsim.harness import (ExperimentConfig, pareto_points, run_experiment,
                             sweep_phase_map, write_outputs, write_pareto,
                             write_sweep)

REPO_ROOT = pathlib.Path(__file__).resolve().parents[1]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default=str(REPO_ROOT / "plotkit" / "test" / "fixtures"))
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args(argv)
    out = pathlib.Path(args.outdir)

    dyn_cfg = ExperimentConfig(procedure="lond", kappa=3.0, seed=args.seed,
                               replications=200, record_stride=250)
    dyn = run_experiment(dyn_cfg)
    paths = write_outputs(dyn, str(out / "dynamics"))
    print(f"dynamics: {paths['trajectory']}")

    sweep_env = Bursty(t=4000, pi_post=0.8, alt=LinearDetectability(5.0))
    sweep_cfg = ExperimentConfig(env=sweep_env, procedure="lond", kappa=8.0,
                                 seed=args.seed, replications=150,
                                 record_stride=4000)
    sweep = sweep_phase_map(sweep_cfg, [0.25, 0.5],
                            np.logspace(-1, 2, 13).tolist())
    paths = write_sweep(sweep, str(out / "phase_map"))
    print(f"phase map: {paths['sweep']}")

    cfgs = []
    for proc in ("lond", "saffron"):
        cfgs.append(ExperimentConfig(procedure=proc, wrapper="none",
                                     seed=args.seed, replications=50,
                                     record_stride=5000))
        for kappa in (0.5, 1.0, 3.0, 8.0):
            cfgs.append(ExperimentConfig(procedure=proc, wrapper="domt",
                                         kappa=kappa, seed=args.seed,
                                         replications=50, record_stride=5000))
    points = pareto_points(cfgs)
    paths = write_pareto(points, str(out / "pareto"), config=cfgs[0])
    print(f"pareto: {paths['pareto']}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
