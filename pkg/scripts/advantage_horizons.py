#!/usr/bin/env python3
"""How long does a bias take to become exploitable?

For each bias level theta and each target accuracy, print the first trial
count k at which the most-frequent-outcome rule reaches the target.  A dash
marks targets beyond the rule's limiting accuracy max(theta, 1-theta).

    python scripts/advantage_horizons.py
"""

from __future__ import annotations

import argparse
from fractions import Fraction

from freqpred.accuracy import ideal_accuracy, threshold_k


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--thetas", nargs="+", default=["2/5", "42/100", "9/20", "47/100", "49/100"]
    )
    parser.add_argument(
        "--targets", nargs="+", type=float, default=[0.51, 0.52, 0.53, 0.54]
    )
    args = parser.parse_args()

    header = ["theta", "ideal"] + [f">={t}" for t in args.targets]
    print("  ".join(f"{h:>10}" for h in header))
    for text in args.thetas:
        theta = Fraction(text)
        cells = [text, f"{float(ideal_accuracy(theta)):.3f}"]
        for target in args.targets:
            k = threshold_k(theta, target)
            cells.append("-" if k is None else str(k))
        print("  ".join(f"{c:>10}" for c in cells))


if __name__ == "__main__":
    main()
