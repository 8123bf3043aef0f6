"""Sweep p and compare the worst observed ||P_+ phi||_p / ||phi||_p with csc(pi/p).

Ratios come from seeded random trigonometric polynomials; the projection's
norm is measured as the integral mean at r = 0.999.
"""

import argparse

from disc_harmonics import riesz_projection
from disc_harmonics.norms import circle_lp_norm, integral_mean, riesz_constant
from disc_harmonics.verify import TrialGenerator


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=float, nargs="+", default=[1.25, 1.5, 2.0, 3.0, 4.0, 8.0])
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--max-degree", type=int, default=16)
    args = ap.parse_args()

    trials = TrialGenerator(args.seed, max_degree=args.max_degree).series(args.trials)
    print(f"{'p':>6} {'csc(pi/p)':>10} {'max ratio':>10} {'mean ratio':>11}")
    for p in args.p:
        ratios = [integral_mean(riesz_projection(phi), 0.999, p).value / circle_lp_norm(phi, p).value
                  for phi in trials]
        print(f"{p:6.3g} {riesz_constant(p):10.6f} {max(ratios):10.6f} {sum(ratios) / len(ratios):11.6f}")


if __name__ == "__main__":
    main()
