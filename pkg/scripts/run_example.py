"""Print the F(t) = |t| example tables (coefficients, H(F'), f_z on the real axis, growth)."""

import argparse

from disc_harmonics.cli import DEFAULT_N, example_tables, render_tables


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--N", type=int, default=DEFAULT_N)
    ap.add_argument("--format", choices=["pretty", "csv", "json"], default="pretty")
    args = ap.parse_args()
    print(render_tables(example_tables(args.N), args.format))


if __name__ == "__main__":
    main()
