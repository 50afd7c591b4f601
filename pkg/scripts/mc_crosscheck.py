#!/usr/bin/env python3
"""Cross-validate the analytic accuracy against the seeded Monte Carlo run.

Simulates the most-frequent-outcome rule at a fixed bias and reports, per
step, the empirical accuracy next to the exact value with a z-score.

    python scripts/mc_crosscheck.py --theta 0.45 --k-max 71 --reps 200000 --seed 7
"""

from __future__ import annotations

import argparse

from freqpred.accuracy import accuracy_recursive
from freqpred.prediction import frequent_outcome_array
from freqpred.simulator import SimulationConfig, simulate_accuracy


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--theta", type=float, default=0.45)
    parser.add_argument("--k-max", type=int, default=71)
    parser.add_argument("--reps", type=int, default=200_000)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--every", type=int, default=10, help="print every n-th step")
    args = parser.parse_args()

    config = SimulationConfig(
        theta_source=args.theta, horizon=args.k_max,
        replications=args.reps, seed=args.seed,
    )
    report = simulate_accuracy(config, frequent_outcome_array(args.k_max))

    worst = 0.0
    print(f"{'k':>4} {'estimate':>10} {'analytic':>10} {'z':>7}")
    for step in report.steps:
        analytic = accuracy_recursive(step.k, args.theta)
        z = (step.estimate - analytic) / step.stderr if step.stderr else 0.0
        worst = max(worst, abs(z))
        if step.k % args.every == 0 or step.k == args.k_max - 1:
            print(f"{step.k:>4} {step.estimate:>10.5f} {analytic:>10.5f} {z:>7.2f}")
    print(f"max |z| over {args.k_max} steps: {worst:.2f}")


if __name__ == "__main__":
    main()
