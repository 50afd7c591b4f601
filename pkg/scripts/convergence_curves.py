#!/usr/bin/env python3
"""Write the accuracy-vs-ideal step curves for a set of bias levels.

Produces one CSV per theta (columns k, pi_k, ideal, gap), the data behind
the usual convergence plots for the most-frequent-outcome rule.

    python scripts/convergence_curves.py --thetas 0.40 0.45 --k-max 100 --outdir data
"""

from __future__ import annotations

import argparse
from pathlib import Path

from freqpred.cli import OutputEnvelope, cmd_curve


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--thetas", nargs="+", default=["0.40", "0.45"])
    parser.add_argument("--k-max", type=int, default=100)
    parser.add_argument("--outdir", type=Path, default=Path("data"))
    parser.add_argument("--digits", type=int, default=10)
    args = parser.parse_args()

    args.outdir.mkdir(parents=True, exist_ok=True)
    for theta in args.thetas:
        name = f"curve_theta_{theta.replace('/', 'over')}.csv"
        target = args.outdir / name
        cmd_curve(theta, args.k_max, OutputEnvelope(destination=str(target)), args.digits)
        print(f"wrote {target}")


if __name__ == "__main__":
    main()
