#!/usr/bin/env python3
"""Wage divergence between high- and low-exposure occupations over time.

Two occupations with the same baseline pay but different shares of hours on
automatable tasks: as algorithmic improvement halves the ceiling each
period, the high-exposure blend collapses toward the ceiling while the
low-exposure one barely moves.

Usage: python3 scripts/occupation_divergence.py [--years N] [--rate G]
"""

import argparse
import math

from caw import TaskProfile, Technology, caw_trajectory, occupation_wage


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--years", type=int, default=6, help="horizon in years")
    parser.add_argument(
        "--rate", type=float, default=math.log(2.0), help="improvement rate g (default ln 2)"
    )
    parser.add_argument("--rc", type=float, default=2.0, help="compute rental rate")
    args = parser.parse_args()

    # Contract-review work: ~80% of hours automatable. Litigation strategy
    # work: ~30%. Same baseline pay on both profiles.
    high_exposure = TaskProfile(s_sub=0.8, w_comp=25.0)
    low_exposure = TaskProfile(s_sub=0.3, w_comp=25.0)

    tech = Technology(lam=1.0, k=1.0, g=args.rate)
    grid = [float(t) for t in range(args.years + 1)]

    print("t,ceiling,high_exposure_wage,low_exposure_wage,gap")
    for t, ceiling in caw_trajectory(tech, args.rc, grid):
        high = occupation_wage(high_exposure, ceiling)
        low = occupation_wage(low_exposure, ceiling)
        print(f"{t:.0f},{ceiling:.4f},{high:.4f},{low:.4f},{low - high:.4f}")


if __name__ == "__main__":
    main()
