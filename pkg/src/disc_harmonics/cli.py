"""Command-line front end.

Usage:
    disc-harmonics extend --preset poisson_boundary --N 64 --at 0.5,0
    disc-harmonics derive --preset abs_t --which dz --at 0.9,0 --identity
    disc-harmonics norms --preset abs_t --space hardy --p 2 --of dz
    disc-harmonics verify all --seed 42
    disc-harmonics example --format csv

Exit codes: 0 success / all checks pass, 1 a verification failed,
2 usage or spec error, 3 numeric-domain error (r >= 1, p out of range).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

import numpy as np

from disc_harmonics.boundary import PRESETS, BoundarySpec, boundary_derivative, preset_series
from disc_harmonics.disc_ops import (
    DiscPoint,
    dz_series,
    dzbar_conj_series,
    hilbert_transform,
    poisson_extend,
    poisson_quadrature_oracle,
    polar_derivative_series,
    polar_derivatives,
    riesz_projection,
    wirtinger_dz,
    wirtinger_dzbar,
)
from disc_harmonics.exceptions import DomainError, SpecError
from disc_harmonics.norms import Exponent, bergman_norm, circle_lp_norm, hardy_norm
from disc_harmonics.verify import (
    CHECK_NAMES,
    SuiteConfig,
    all_passed,
    hilbert_growth_table,
    run_all,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3
DEFAULT_N = 8191

# stable CSV/JSON column orders
EXTEND_COLUMNS = ["r", "theta", "re", "im"]
ORACLE_COLUMNS = ["oracle_re", "oracle_im", "oracle_error", "abs_diff"]
DERIVE_COLUMNS = ["r", "theta", "which", "re", "im"]
NORM_COLUMNS = ["space", "of", "p", "value", "method", "error", "lower_bound", "divergent", "parseval"]
REPORT_COLUMNS = ["check", "pass", "observed", "bound", "margin", "runtime_ms", "seed", "params"]


# ---------------------------------------------------------------------------
# rendering

def _num(x) -> str:
    if isinstance(x, bool) or x is None:
        return json.dumps(x)
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    x = float(x)
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    return format(x, ".17g")


def to_json(obj, indent: int = 0) -> str:
    """JSON text with every float written to 17 significant digits."""
    pad, inner = "  " * indent, "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {to_json(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(to_json(v) for v in obj) + "]"
        return "[\n" + ",\n".join(inner + to_json(v, indent + 1) for v in obj) + "\n" + pad + "]"
    if isinstance(obj, str):
        return json.dumps(obj)
    return _num(obj)


def _csv_cell(x) -> str:
    if isinstance(x, str):
        return '"' + x.replace('"', '""') + '"' if ("," in x or '"' in x) else x
    if isinstance(x, (dict, list)):
        return _csv_cell(json.dumps(x, sort_keys=True))
    return _num(x).strip('"') if x is not None else ""


def _pretty_cell(x) -> str:
    if isinstance(x, (float, np.floating)):
        return format(float(x), ".10g")
    if isinstance(x, (dict, list)):
        return json.dumps(x, sort_keys=True)
    return "" if x is None else str(x)


def render_tables(tables: list[dict], fmt: str) -> str:
    """Render ``[{"name", "columns", "rows"}]`` as json, csv or an aligned text table."""
    if fmt == "json":
        return to_json({"tables": tables})
    out = []
    for t in tables:
        if fmt == "csv":
            if len(tables) > 1:
                out.append(f"# {t['name']}")
            out.append(",".join(t["columns"]))
            out.extend(",".join(_csv_cell(v) for v in row) for row in t["rows"])
        else:
            cells = [[_pretty_cell(v) for v in row] for row in t["rows"]]
            widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(t["columns"])]
            out.append(f"== {t['name']} ==")
            out.append("  ".join(c.rjust(w) for c, w in zip(t["columns"], widths)))
            out.extend("  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in cells)
            out.append("")
    return "\n".join(out).rstrip("\n")


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------------------
# argument helpers

def _parse_point(text: str) -> DiscPoint:
    try:
        r, theta = (float(v) for v in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"point must be 'r,theta', got {text!r}") from exc
    return (r, theta)


def _parse_p(text: str) -> float:
    if text.lower() in ("inf", "infinity", "oo"):
        return math.inf
    try:
        return float(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad exponent {text!r}") from exc


def _load_spec(args) -> BoundarySpec:
    if args.spec:
        try:
            with open(args.spec) as fh:
                text = fh.read()
        except OSError as exc:
            raise SpecError(f"cannot read {args.spec}: {exc.strerror}") from exc
        return BoundarySpec.from_json(text, source=args.spec)
    return BoundarySpec(kind="preset", name=args.preset)


def _series(args, spec: BoundarySpec):
    # explicit --N wins; otherwise the spec's own N; presets fall back to DEFAULT_N
    N = args.N
    if N is None and spec.N is None and spec.kind != "coefficients":
        N = DEFAULT_N
    return spec.to_series(N), (N if N is not None else spec.N)


def _points(args) -> list[DiscPoint]:
    return [DiscPoint(r, theta) for r, theta in (args.at or [(0.0, 0.0)])]


def _add_input(p: argparse.ArgumentParser):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", help=f"named boundary function ({', '.join(sorted(PRESETS))}); "
                                      "parameters inline, e.g. cos:3")
    src.add_argument("--spec", help="path to a BoundarySpec JSON file")
    p.add_argument("--N", type=int, default=None,
                   help=f"truncation degree (presets default to {DEFAULT_N})")


def _add_output(p: argparse.ArgumentParser, default: str = "pretty"):
    p.add_argument("--format", choices=["json", "csv", "pretty"], default=default)
    p.add_argument("--output", "-o", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="disc-harmonics",
                                     description="Harmonic functions on the unit disc from boundary data.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extend", help="Poisson extension P[F] at disc points")
    _add_input(p)
    p.add_argument("--at", type=_parse_point, action="append", metavar="R,THETA")
    p.add_argument("--oracle", action="store_true", help="add the quadrature oracle columns")
    p.add_argument("--M", type=int, default=1 << 16, help="oracle panel count")
    _add_output(p)

    p = sub.add_parser("derive", help="Wirtinger and polar derivatives of P[F]")
    _add_input(p)
    p.add_argument("--at", type=_parse_point, action="append", metavar="R,THETA")
    p.add_argument("--which", choices=["dz", "dzbar", "theta", "rfr"], default="dz")
    p.add_argument("--identity", action="store_true",
                   help="append the residual of 2izf_z = f_theta + i r f_r")
    _add_output(p)

    p = sub.add_parser("norms", help="circle, Hardy and Bergman norms")
    _add_input(p)
    p.add_argument("--space", choices=["circle", "hardy", "bergman"], required=True)
    p.add_argument("--p", type=_parse_p, required=True)
    p.add_argument("--of", choices=["f", "dz", "dzbar", "theta", "rfr"], default="f",
                   help="which function of F to measure (dzbar measures conj(f_zbar))")
    p.add_argument("--M", type=int, default=None, help="angular panels (power of two)")
    _add_output(p)

    p = sub.add_parser("verify", help="run verification checks")
    p.add_argument("check", choices=list(CHECK_NAMES) + ["all"])
    p.add_argument("--p", type=_parse_p, default=None, help="exponent for p-dependent checks")
    p.add_argument("--trials", type=int, default=None, help="override every trial count")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--no-runtime", action="store_true",
                   help="report runtime_ms as 0 so repeated runs are byte-identical")
    _add_output(p, default="json")

    p = sub.add_parser("example", help="the F(t) = |t| worked example end to end")
    p.add_argument("--N", type=int, default=DEFAULT_N)
    p.add_argument("--emit", choices=["table", "csv"], default=None,
                   help="shorthand for --format pretty / csv")
    _add_output(p)
    return parser


# ---------------------------------------------------------------------------
# commands

def cmd_extend(args) -> int:
    spec = _load_spec(args)
    F, N = _series(args, spec)
    pts = _points(args)
    columns = EXTEND_COLUMNS + (ORACLE_COLUMNS if args.oracle else [])
    values = np.atleast_1d(poisson_extend(F, pts))
    if args.oracle:
        oracle = poisson_quadrature_oracle(spec.evaluator(N), pts, args.M)
    rows = []
    for k, (pt, v) in enumerate(zip(pts, values)):
        row = [pt.r, pt.theta, v.real, v.imag]
        if args.oracle:
            o = oracle.value[k]
            row += [o.real, o.imag, float(oracle.error[k]), abs(o - v)]
        rows.append(row)
    _emit(render_tables([{"name": "extend", "columns": columns, "rows": rows}], args.format), args.output)
    return EXIT_OK


def cmd_derive(args) -> int:
    spec = _load_spec(args)
    F, _ = _series(args, spec)
    pts = _points(args)
    if args.which == "dz":
        values = np.atleast_1d(wirtinger_dz(F, pts))
    elif args.which == "dzbar":
        values = np.atleast_1d(wirtinger_dzbar(F, pts))
    else:
        f_theta, rf_r = polar_derivatives(F, pts)
        values = np.atleast_1d(f_theta if args.which == "theta" else rf_r)
    columns = DERIVE_COLUMNS + (["rtheta_residual"] if args.identity else [])
    if args.identity:
        z = np.array([p.z for p in pts])
        f_theta, rf_r = polar_derivatives(F, pts)
        residual = np.abs(2j * z * wirtinger_dz(F, pts) - f_theta - 1j * rf_r)
    rows = []
    for k, (pt, v) in enumerate(zip(pts, values)):
        row = [pt.r, pt.theta, args.which, v.real, v.imag]
        if args.identity:
            row.append(float(residual[k]))
        rows.append(row)
    _emit(render_tables([{"name": f"derive:{args.which}", "columns": columns, "rows": rows}],
                        args.format), args.output)
    return EXIT_OK


def _target(F, which: str):
    if which == "f":
        return F
    if which == "dz":
        return dz_series(F)
    if which == "dzbar":
        return dzbar_conj_series(F)
    theta, rfr = polar_derivative_series(F)
    return theta if which == "theta" else rfr


def cmd_norms(args) -> int:
    spec = _load_spec(args)
    F, _ = _series(args, spec)
    ex = Exponent(args.p)
    f = _target(F, args.of)
    if args.space == "circle":
        nv = circle_lp_norm(f, ex, args.M)
    elif args.space == "hardy":
        nv = hardy_norm(f, ex, M=args.M)
    else:
        nv = bergman_norm(f, ex, M=args.M)
    row = [args.space, args.of, ex.p, nv.value, nv.method, nv.error, nv.lower_bound, nv.divergent,
           nv.details.get("parseval")]
    _emit(render_tables([{"name": "norms", "columns": NORM_COLUMNS, "rows": [row]}], args.format),
          args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    config = SuiteConfig(seed=args.seed, trials=args.trials, record_runtime=not args.no_runtime)
    if args.p is not None:
        ex = Exponent(args.p)
        if args.check in ("riesz", "main_theorem", "pointwise") and (ex.p == 1.0 or ex.infinite):
            raise DomainError(f"p={args.p}: the Riesz projection is unbounded at the endpoints "
                              "p = 1 and p = inf, so no finite constant exists; "
                              "run 'verify endpoint' (check_endpoint_failure) for the counterexamples")
        config.riesz_exponents = (ex.p,)
        config.pointwise_exponents = (ex.p,)
        config.jensen_exponents = (ex.p,)
    reports = run_all(config, only=args.check)
    if args.format == "json":
        text = to_json([r.to_dict() for r in reports])
    else:
        rows = [[r.check, r.passed, r.observed, r.bound, r.margin, r.runtime_ms, r.seed, r.params]
                for r in reports]
        text = render_tables([{"name": "verify", "columns": REPORT_COLUMNS, "rows": rows}], args.format)
    _emit(text, args.output)
    return EXIT_OK if all_passed(reports) else EXIT_FAILED


def example_tables(N: int = DEFAULT_N) -> list[dict]:
    """Tables reproducing the ``F(t) = |t|`` example."""
    F = preset_series("abs_t", N)
    dF = boundary_derivative(F)
    H = hilbert_transform(dF)
    # coefficients of i z f_z are those of P_+[F']
    izfz = riesz_projection(dF)
    coef_rows = []
    for n in range(0, 12):
        a = izfz.coef(n)
        exact = complex(0.0, -2.0 / (math.pi * n)) if n % 2 else 0j
        coef_rows.append([n, a.real, a.imag, exact.real, exact.imag, abs(a - exact)])

    thetas = np.linspace(0.1, math.pi - 0.1, 12)
    hv = np.asarray(H.evaluate(thetas)).real
    dv = np.asarray(dF.evaluate(thetas)).real
    closed = 2 / math.pi * np.log(np.abs(np.tan(thetas / 2)))
    theta_rows = [[t, d, h, c, abs(h - c)] for t, d, h, c in zip(thetas, dv, hv, closed)]
    theta_rows.append([math.pi / 2, float(dF.evaluate(math.pi / 2).real),
                       float(H.evaluate(math.pi / 2).real), 0.0, abs(float(H.evaluate(math.pi / 2).real))])

    radii = [0.5, 0.9, 0.99, 0.999]
    fz = np.atleast_1d(wirtinger_dz(F, np.array(radii, dtype=complex)))
    r_rows = []
    for r, v in zip(radii, fz):
        cf = 2 / (math.pi * r) * math.atanh(r)
        r_rows.append([r, abs(v), cf, abs(abs(v) - cf)])

    growth = [[row["N"], row["M"], row["grid_max"], row["L1"], row["L2"], row["L3"]]
              for row in hilbert_growth_table()]
    return [
        {"name": "izfz_coefficients", "columns": ["n", "re", "im", "exact_re", "exact_im", "abs_diff"],
         "rows": coef_rows},
        {"name": "hilbert_of_derivative",
         "columns": ["theta", "dF", "H_spectral", "H_closed_form", "abs_diff"], "rows": theta_rows},
        {"name": "fz_on_real_axis", "columns": ["r", "abs_fz_series", "abs_fz_closed_form", "abs_diff"],
         "rows": r_rows},
        {"name": "hilbert_growth", "columns": ["N", "M", "grid_max", "L1", "L2", "L3"], "rows": growth},
    ]


def cmd_example(args) -> int:
    fmt = {"table": "pretty", "csv": "csv"}.get(args.emit, args.format)
    _emit(render_tables(example_tables(args.N), fmt), args.output)
    return EXIT_OK


COMMANDS = {"extend": cmd_extend, "derive": cmd_derive, "norms": cmd_norms,
            "verify": cmd_verify, "example": cmd_example}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(json.dumps({"error": "domain", "message": str(exc)}), file=sys.stderr)
        return EXIT_DOMAIN
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
