"""Phase map of when exploration pays against burst delay.

Sweeps the burst-delay fraction rho and the miss/false-positive price ratio
b/a on bursty streams, recording the mean regret difference (base minus
wrapped) per cell. Positive cells favor the wrapper. The tax column carries
the closed-form break-even ratio for each rho so the empirical sign change
can be read against it.
"""

import argparse
import sys

import numpy as np

from domtsim.environments import Bursty, LinearDetectability
from domtsim.harness import ExperimentConfig, sweep_phase_map, write_sweep


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="out/sweep")
    ap.add_argument("--replications", type=int, default=150)
    ap.add_argument("--t", type=int, default=4000)
    ap.add_argument("--kappa", type=float, default=8.0)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--rhos", type=float, nargs="+",
                    default=[0.1, 0.25, 0.5, 0.75, 0.9])
    args = ap.parse_args(argv)

    env = Bursty(t=args.t, pi_post=0.8, alt=LinearDetectability(5.0))
    cfg = ExperimentConfig(env=env, procedure="lond", kappa=args.kappa,
                           seed=args.seed, replications=args.replications,
                           record_stride=args.t)
    ratios = np.logspace(-1, 2, 13).tolist()
    result = sweep_phase_map(cfg, args.rhos, ratios)
    paths = write_sweep(result, args.outdir)
    for rho in args.rhos:
        row = [c for c in result.cells if c.rho == rho]
        wins = sum(c.domt_wins for c in row)
        print(f"rho={rho:.2f} tax={row[0].tax:.3f} wrapper_wins={wins}/{len(row)}")
    print(f"wrote {paths['sweep']}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
