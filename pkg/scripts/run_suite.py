"""Run the full verification suite and write one JSON report per line."""

import argparse
import sys

from disc_harmonics.verify import SuiteConfig, all_passed, run_all


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--trials", type=int, default=None)
    ap.add_argument("--only", default=None, help="single check group")
    ap.add_argument("--output", default="-")
    ap.add_argument("--no-runtime", action="store_true")
    args = ap.parse_args()

    config = SuiteConfig(seed=args.seed, trials=args.trials, record_runtime=not args.no_runtime)
    reports = run_all(config, args.only)
    lines = [r.to_json() for r in reports]
    if args.output == "-":
        print("\n".join(lines))
    else:
        with open(args.output, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    for r in reports:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.check:<20s} observed={r.observed:.6g} "
              f"bound={r.bound:.6g} margin={r.margin:+.3e} ({r.runtime_ms:.0f} ms)", file=sys.stderr)
    sys.exit(0 if all_passed(reports) else 1)


if __name__ == "__main__":
    main()
