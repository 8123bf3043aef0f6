"""Executable checks of the identities and inequalities for P[F] and its derivatives.

Each ``check_*`` returns a :class:`VerificationReport`. Inequality checks
report ``observed`` as the worst ratio of the two sides with the constant
stripped, ``bound`` as the constant, and additionally rerun the comparison
with the constant halved; that deliberately wrong version has to fail on at
least one input, otherwise the check is reported as failed (a comparison
that nothing can violate tests nothing).

``margin`` is signed so that a positive value always means "passing":
``(bound - observed)/bound`` for upper bounds and ``(observed - bound)/bound``
for lower bounds.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from disc_harmonics.boundary import (
    FourierSeries,
    boundary_derivative,
    preset_evaluator,
    preset_series,
    series_from_samples,
    uniform_grid,
)
from disc_harmonics.disc_ops import (
    conjugate_extension_quadrature,
    cauchy_integral_oracle,
    conjugate_function,
    dz_series,
    dzbar_conj_series,
    hilbert_transform,
    poisson_extend,
    poisson_quadrature_oracle,
    polar_derivative_series,
    polar_derivatives,
    pv_hilbert_oracle,
    riesz_projection,
    wirtinger_dz,
    wirtinger_dzbar,
)
from disc_harmonics.exceptions import DomainError
from disc_harmonics.norms import (
    Exponent,
    bergman_norm,
    circle_lp_norm,
    hardy_norm,
    integral_mean,
    kernel_moment,
    kernel_moment_bound,
    log_kernel_mean,
    pointwise_constant,
    riesz_constant,
)

REL_SLACK = 1e-6
PARSEVAL_TOL = 1e-10
MUTATION_SCALE = 0.5
EXAMPLE_N = 8191


@dataclass
class VerificationReport:
    check: str
    params: dict
    observed: float
    bound: float
    margin: float
    passed: bool
    runtime_ms: float = 0.0
    seed: int | None = None

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "observed": self.observed,
            "bound": self.bound,
            "margin": self.margin,
            "pass": self.passed,
            "runtime_ms": self.runtime_ms,
            "seed": self.seed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        return cls(check=data["check"], params=data["params"], observed=data["observed"],
                   bound=data["bound"], margin=data["margin"], passed=data["pass"],
                   runtime_ms=data["runtime_ms"], seed=data["seed"])

    @property
    def vacuous(self) -> bool:
        return bool(self.params.get("vacuous", False))


def _clean(obj):
    """Make params JSON-safe: numpy scalars to Python, non-finite floats to strings."""
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_clean(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return x if math.isfinite(x) else str(x)
    return obj


def _finish(check: str, params: dict, observed: float, bound: float, passed: bool,
            seed: int | None, t0: float, upper: bool = True) -> VerificationReport:
    observed, bound = float(observed), float(bound)
    if bound != 0:
        margin = (bound - observed) / abs(bound) if upper else (observed - bound) / abs(bound)
    else:
        margin = -observed if upper else observed
    return VerificationReport(check=check, params=_clean(params), observed=observed,
                              bound=bound, margin=float(margin), passed=bool(passed),
                              runtime_ms=1e3 * (time.perf_counter() - t0), seed=seed)


def _vacuous(check: str, params: dict, bound: float, seed: int | None, t0: float):
    params = dict(params, vacuous=True)
    return _finish(check, params, 0.0, bound, True, seed, t0)


# ---------------------------------------------------------------------------
# inputs

@dataclass
class TrialGenerator:
    """Seeded random trigonometric polynomials with complex Gaussian coefficients."""

    seed: int
    min_degree: int = 1
    max_degree: int = 16
    real_valued: bool = False
    zero_mean: bool = False

    def series(self, count: int) -> list[FourierSeries]:
        rng = np.random.default_rng(self.seed)
        out = []
        for _ in range(count):
            N = int(rng.integers(self.min_degree, self.max_degree + 1))
            c = (rng.standard_normal(2 * N + 1) + 1j * rng.standard_normal(2 * N + 1)) / math.sqrt(2)
            if self.real_valued:
                c = 0.5 * (c + np.conj(c[::-1]))
            if self.zero_mean:
                c[N] = 0.0
            out.append(FourierSeries(c, real_valued=self.real_valued))
        return out


def disc_points(seed: int, count: int, rmax: float = 0.99) -> np.ndarray:
    """Seeded points, area-uniform in ``|z| <= rmax``, always including ``0`` and ``rmax``."""
    rng = np.random.default_rng(seed + 7919)
    r = rmax * np.sqrt(rng.random(count))
    theta = rng.uniform(0, 2 * np.pi, count)
    if count >= 1:
        r[0] = 0.0
    if count >= 2:
        r[1] = rmax
    return r * np.exp(1j * theta)


def _integrate_antiderivative(dF: FourierSeries) -> FourierSeries:
    """Mean-zero ``F`` with ``F' = dF`` (the mean of ``dF`` is dropped)."""
    n = dF.indices
    safe = np.where(n == 0, 1, n)
    return FourierSeries(np.where(n == 0, 0, dF.coeffs / (1j * safe)))


def pointwise_witness(p: float, r: float, N: int = 2047) -> FourierSeries:
    """Boundary data ``F`` nearly extremal for the pointwise bound at ``z = r``.

    ``F'`` is the Hoelder-dual of the Cauchy kernel ``e^{-it}/(1 - r e^{-it})``
    (mean removed, truncated to degree N).
    """
    q = Exponent(p).q
    M = max(1 << 14, 4 * (2 * N + 2))
    t = uniform_grid(M)
    K = np.exp(-1j * t) / (1 - r * np.exp(-1j * t))
    dF = series_from_samples(np.abs(K) ** (q - 2) * np.conj(K), N)
    return _integrate_antiderivative(dF)


# ---------------------------------------------------------------------------
# checks

def _require_interior(p) -> Exponent:
    ex = Exponent(p)
    if ex.p == 1.0 or ex.infinite:
        raise DomainError(f"p={p}: the bound fails at the endpoints p = 1 and p = inf; "
                          "run check_endpoint_failure for the counterexamples")
    return ex


def check_riesz_inequality(p, trials: int = 200, seed: int = 0, radius: float = 0.999,
                           constant_scale: float = 1.0) -> VerificationReport:
    """``||P_+ phi||_p <= csc(pi/p) ||phi||_p`` on random trigonometric polynomials.

    ``p = 2`` uses Parseval sums (tolerance 1e-10); other ``p`` use the
    integral mean of ``P_+ phi`` at ``radius`` against the circle norm.
    """
    t0 = time.perf_counter()
    ex = _require_interior(p)
    A = riesz_constant(ex) * constant_scale
    params = {"p": ex.p, "trials": trials, "radius": radius, "constant_scale": constant_scale}
    if trials <= 0:
        return _vacuous("riesz_inequality", params, A, seed, t0)
    witnesses = [FourierSeries.from_dict({1: 1.0}), FourierSeries.from_dict({-1: 1.0})]
    inputs = witnesses + TrialGenerator(seed).series(trials)
    ratios = []
    for phi in inputs:
        if ex.p == 2.0:
            lhs = math.sqrt(float(np.sum(np.abs(phi.coeffs[phi.degree:]) ** 2)))
            rhs = math.sqrt(float(np.sum(np.abs(phi.coeffs) ** 2)))
        else:
            lhs = integral_mean(riesz_projection(phi), radius, ex).value
            rhs = circle_lp_norm(phi, ex).value
        ratios.append(lhs / rhs)
    ratios = np.array(ratios)
    tol = PARSEVAL_TOL if ex.p == 2.0 else REL_SLACK * A
    holds = bool(np.all(ratios <= A + tol))
    mutation_caught = bool(np.any(ratios > MUTATION_SCALE * A + tol))
    params.update(method="parseval" if ex.p == 2.0 else "quadrature", tolerance=tol,
                  witness_ratios=ratios[:2], mutation_caught=mutation_caught,
                  random_max_ratio=float(ratios[2:].max()))
    return _finish("riesz_inequality", params, ratios.max(), A, holds and mutation_caught, seed, t0)


def check_main_theorem_lp(p, trials: int = 500, seed: int = 0, radius: float = 0.999,
                          constant_scale: float = 1.0) -> VerificationReport:
    """``max(||f_z||_p, ||conj f_zbar||_p) <= A_p ||F'||_p`` for random ``F``.

    At ``p = 2`` the Hardy norms are exact Parseval sums on the boundary.
    """
    t0 = time.perf_counter()
    ex = _require_interior(p)
    A = riesz_constant(ex) * constant_scale
    params = {"p": ex.p, "trials": trials, "radius": radius, "constant_scale": constant_scale}
    if trials <= 0:
        return _vacuous("main_theorem_lp", params, A, seed, t0)
    witnesses = [FourierSeries.from_dict({1: 1.0}), FourierSeries.from_dict({-1: 1.0})]
    inputs = witnesses + TrialGenerator(seed + 1).series(trials)
    ratios = []
    for F in inputs:
        dF = boundary_derivative(F)
        if ex.p == 2.0:
            n = F.indices
            w = (n * np.abs(F.coeffs)) ** 2
            lhs = math.sqrt(max(float(np.sum(w[n > 0])), float(np.sum(w[n < 0]))))
            rhs = math.sqrt(float(np.sum(w)))
        else:
            lhs = max(integral_mean(dz_series(F), radius, ex).value,
                      integral_mean(dzbar_conj_series(F), radius, ex).value)
            rhs = circle_lp_norm(dF, ex).value
        ratios.append(lhs / rhs if rhs > 0 else 0.0)
    ratios = np.array(ratios)
    tol = PARSEVAL_TOL if ex.p == 2.0 else REL_SLACK * A
    holds = bool(np.all(ratios <= A + tol))
    mutation_caught = bool(np.any(ratios > MUTATION_SCALE * A + tol))
    params.update(method="parseval" if ex.p == 2.0 else "quadrature", tolerance=tol,
                  mutation_caught=mutation_caught)
    return _finish("main_theorem_lp", params, ratios.max(), A, holds and mutation_caught, seed, t0)


def identity_2izfz_residual(F: FourierSeries, z) -> np.ndarray:
    """``|2 i z f_z - P[F' + i H(F')](z)|``."""
    dF = boundary_derivative(F)
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    lhs = 2j * z * wirtinger_dz(F, z)
    rhs = poisson_extend(dF + 1j * hilbert_transform(dF), z)
    return np.abs(lhs - rhs)


def check_identity_2izfz(trials: int = 100, seed: int = 0, points: int = 20,
                         tolerance: float = 1e-9) -> VerificationReport:
    """``2 i z f_z = P[F' + i H(F')]`` on random data, plus the ``abs_t`` instance."""
    t0 = time.perf_counter()
    params = {"trials": trials, "points": points, "tolerance": tolerance}
    if trials <= 0:
        return _vacuous("identity_2izfz", params, tolerance, seed, t0)
    zs = disc_points(seed, points)
    worst = 0.0
    for F in TrialGenerator(seed + 2).series(trials):
        worst = max(worst, float(identity_2izfz_residual(F, zs).max()))
    abs_tol = 1e-7
    abs_res = float(identity_2izfz_residual(preset_series("abs_t", EXAMPLE_N), 0.9 * np.exp(0.1j))[0])
    params.update(abs_t_residual=abs_res, abs_t_tolerance=abs_tol)
    ok = worst <= tolerance and abs_res <= abs_tol
    return _finish("identity_2izfz", params, worst, tolerance, ok, seed, t0)


def check_polar_lemma(trials: int = 100, seed: int = 0, points: int = 20,
                      exponents=(1.0, 1.5, 2.0, 3.0, math.inf), radius: float = 0.99,
                      tolerance: float = 1e-10) -> VerificationReport:
    """``f_theta = P[F']`` coefficientwise, ``2izf_z = f_theta + i r f_r`` pointwise, and
    ``M_p(r, f_theta) <= ||F'||_p``.

    ``observed`` is the worst norm ratio (bound 1); identity residuals are in params.
    """
    t0 = time.perf_counter()
    params = {"trials": trials, "points": points, "exponents": list(exponents),
              "radius": radius, "tolerance": tolerance}
    if trials <= 0:
        return _vacuous("polar_lemma", params, 1.0, seed, t0)
    zs = disc_points(seed, points)
    cases = [FourierSeries.from_dict({1: 1.0})] + TrialGenerator(seed + 3).series(trials)
    cases.append(preset_series("abs_t", 1023))
    coef_dev = rtheta_res = 0.0
    ratios = []
    abs_zs = disc_points(seed + 1, 12)
    for k, F in enumerate(cases):
        dF = boundary_derivative(F)
        theta_series, _ = polar_derivative_series(F)
        coef_dev = max(coef_dev, float(np.max(np.abs(theta_series.coeffs - dF.coeffs))))
        pts = abs_zs if k == len(cases) - 1 else zs
        f_theta, rf_r = polar_derivatives(F, pts)
        res = np.abs(2j * pts * wirtinger_dz(F, pts) - f_theta - 1j * rf_r)
        spec = np.abs(f_theta - poisson_extend(dF, pts))
        rtheta_res = max(rtheta_res, float(res.max()), float(spec.max()))
        for p in exponents:
            rhs = circle_lp_norm(dF, p).value
            lhs = integral_mean(theta_series, radius, p).value
            ratios.append(lhs / rhs if rhs > 0 else 0.0)
    ratios = np.array(ratios)
    holds = bool(np.all(ratios <= 1.0 + REL_SLACK))
    mutation_caught = bool(np.any(ratios > MUTATION_SCALE + REL_SLACK))
    params.update(coefficient_deviation=coef_dev, rtheta_residual=rtheta_res,
                  mutation_caught=mutation_caught)
    ok = holds and mutation_caught and coef_dev <= tolerance and rtheta_res <= tolerance
    return _finish("polar_lemma", params, ratios.max(), 1.0, ok, seed, t0)


def hilbert_growth_table(levels=(9, 11, 13, 15, 17)) -> list[dict]:
    """Grid sup and L^1, L^2, L^3 norms of ``H(F')`` for ``abs_t`` as degree and grid refine 4x."""
    rows = []
    for k in levels:
        N = 2 ** k - 1
        H = hilbert_transform(preset_series("square_wave", N))
        M = 4 * (N + 1)
        vals = np.abs(H.samples(M))
        row = {"N": N, "M": M, "grid_max": float(vals.max())}
        for p in (1, 2, 3):
            row[f"L{p}"] = float(np.mean(vals ** p)) ** (1.0 / p)
        rows.append(row)
    return rows


def check_endpoint_failure(N: int = EXAMPLE_N, delta: float = 0.05) -> VerificationReport:
    """Counterexamples at ``p = 1`` and ``p = inf``.

    (a) ``Re (1+z)/(1-z)`` is the Poisson kernel with ``M_1 = 1`` while its
    Riesz projection ``1/(1-z)`` has ``M_1`` growing like ``log 1/(1-r)``;
    (b) for ``F = |t|``, ``|f_z(r)|`` grows like ``arctanh(r)``;
    (c) ``H(F')`` has unbounded grid maxima (log growth under refinement)
    but stable ``L^1, L^2, L^3`` norms.

    ``observed`` is the smallest grid-max increment per 4x refinement,
    ``bound`` the required 0.5.
    """
    t0 = time.perf_counter()
    radii = (0.9, 0.99, 0.999)
    poisson = lambda z: (1 - np.abs(z) ** 2) / np.abs(1 - z) ** 2
    cauchy = lambda z: 1.0 / (1.0 - z)
    m1_poisson = [integral_mean(poisson, r, 1).value for r in radii]
    m1_cauchy = [integral_mean(cauchy, r, 1).value for r in radii]
    log_ratio = [m / math.log(1 / (1 - r)) for m, r in zip(m1_cauchy, radii)]
    part_a = (all(abs(m - 1) < 1e-8 for m in m1_poisson) and m1_cauchy[1] > 2
              and all(x >= 0.3 for x in log_ratio)
              and all(b > a for a, b in zip(m1_cauchy, m1_cauchy[1:])))

    fz = dz_series(preset_series("abs_t", N))
    r_end = 0.999
    sup_end = integral_mean(fz, r_end, math.inf).value
    closed = 2.0 / (math.pi * r_end) * math.atanh(r_end)
    b_radii = [1 - 2.0 ** -k for k in range(1, 10)] + [r_end]
    sups = [integral_mean(fz, r, math.inf).value for r in b_radii]
    part_b = sup_end >= (1 - delta) * closed and all(b > a for a, b in zip(sups, sups[1:]))

    table = hilbert_growth_table()
    incs = [b["grid_max"] - a["grid_max"] for a, b in zip(table, table[1:])]
    lp_drift = {f"L{p}": abs(table[-1][f"L{p}"] - table[-2][f"L{p}"]) for p in (1, 2, 3)}
    H_mid = float(hilbert_transform(preset_series("square_wave", N)).evaluate(math.pi / 2).real)
    part_c = min(incs) >= 0.5 and max(lp_drift.values()) <= 1e-3 and abs(H_mid) <= 1e-3

    params = {"N": N, "delta": delta,
              "poisson_M1": m1_poisson, "cauchy_M1": m1_cauchy, "cauchy_M1_over_log": log_ratio,
              "fz_sup_r0999": sup_end, "fz_closed_form_r0999": closed,
              "fz_sup_radii": b_radii, "fz_sup_table": sups,
              "hilbert_table": table, "hilbert_increments": incs, "hilbert_lp_drift": lp_drift,
              "hilbert_at_half_pi": H_mid,
              "part_a": part_a, "part_b": part_b, "part_c": part_c}
    return _finish("endpoint_failure", params, min(incs), 0.5, part_a and part_b and part_c,
                   None, t0, upper=False)


def check_pointwise_bound(p, trials: int = 50, seed: int = 0, radii=(0.0, 0.5, 0.9, 0.99),
                          constant_scale: float = 1.0) -> VerificationReport:
    """``max(|f_z|, |f_zbar|) <= C_p ||F'||_p (1 - |z|^2)^{-1/p}`` and
    ``|f_z| + |f_zbar| <= 2 C_p ||F'||_p (1 - |z|^2)^{-1/p}``.

    Inputs: random ``F``, ``abs_t``, and near-extremal witnesses at each
    nonzero radius (the halved constant must fail on those).
    """
    t0 = time.perf_counter()
    ex = _require_interior(p)
    C = pointwise_constant(ex) * constant_scale
    params = {"p": ex.p, "trials": trials, "radii": list(radii), "constant_scale": constant_scale}
    if trials <= 0:
        return _vacuous("pointwise_bound", params, C, seed, t0)
    rng = np.random.default_rng(seed + 4)
    rs = np.asarray(radii, dtype=float)
    # abs_t peaks on the real axis; each witness is extremal at z = r only
    cases = [(preset_series("abs_t", EXAMPLE_N), rs.astype(complex))]
    cases += [(pointwise_witness(ex.p, r), np.array([r], dtype=complex)) for r in rs if r > 0]
    for F in TrialGenerator(seed + 5).series(trials):
        cases.append((F, rs * np.exp(1j * rng.uniform(0, 2 * np.pi, rs.size))))
    ratios, d_ratios = [], []
    for F, zs in cases:
        norm = circle_lp_norm(boundary_derivative(F), ex).value
        if norm == 0:
            continue
        fz = np.abs(wirtinger_dz(F, zs))
        fzb = np.abs(wirtinger_dzbar(F, zs))
        scale = norm * (1 - np.abs(zs) ** 2) ** (-1.0 / ex.p)
        ratios.extend(np.maximum(fz, fzb) / scale)
        d_ratios.extend((fz + fzb) / (2 * scale))
    ratios = np.array(ratios)
    holds = bool(np.all(ratios <= C * (1 + REL_SLACK)) and np.all(np.array(d_ratios) <= C * (1 + REL_SLACK)))
    mutation_caught = bool(np.any(ratios > MUTATION_SCALE * C * (1 + REL_SLACK)))
    params.update(mutation_caught=mutation_caught, max_df_ratio=float(max(d_ratios)))
    return _finish("pointwise_bound", params, ratios.max(), C, holds and mutation_caught, seed, t0)


def check_jensen_step(p, trials: int = 20, seed: int = 0, radii=(0.5, 0.9, 0.99),
                      constant_scale: float = 1.0) -> VerificationReport:
    """``int_0^{2pi} |f_z(r e^{i theta})|^p d theta <= 2 pi ||F'||_p^p (I_0(r))^p``,
    ``I_0(r) = (1/2pi) int dt/|1 - r e^{-it}|``; observed is the worst LHS/RHS."""
    t0 = time.perf_counter()
    ex = Exponent(p)
    if ex.infinite:
        raise DomainError("the Jensen step needs p < inf")
    params = {"p": ex.p, "trials": trials, "radii": list(radii), "constant_scale": constant_scale}
    if trials <= 0:
        return _vacuous("jensen_step", params, constant_scale, seed, t0)
    cases = [FourierSeries.from_dict({1: 1.0}), preset_series("abs_t", EXAMPLE_N)]
    cases += TrialGenerator(seed + 6).series(trials)
    ratios = []
    for F in cases:
        dnorm = circle_lp_norm(boundary_derivative(F), ex).value
        if dnorm == 0:
            continue
        fz = dz_series(F)
        for r in radii:
            lhs = 2 * math.pi * integral_mean(fz, r, ex).value ** ex.p
            rhs = 2 * math.pi * dnorm ** ex.p * log_kernel_mean(r) ** ex.p
            ratios.append(lhs / rhs)
    ratios = np.array(ratios)
    bound = constant_scale
    holds = bool(np.all(ratios <= bound * (1 + REL_SLACK)))
    mutation_caught = bool(np.any(ratios > MUTATION_SCALE * bound * (1 + REL_SLACK)))
    params.update(mutation_caught=mutation_caught)
    return _finish("jensen_step", params, ratios.max(), bound, holds and mutation_caught, seed, t0)


def holder_pairs(seed: int, count: int, rmax: float = 0.999) -> tuple[np.ndarray, np.ndarray]:
    """Seeded pairs ``(z, w)`` in ``|z|, |w| <= rmax`` with log-uniform separations in [1e-6, 1]."""
    rng = np.random.default_rng(seed + 104729)
    z = rmax * np.sqrt(rng.random(count)) * np.exp(1j * rng.uniform(0, 2 * np.pi, count))
    rho = 10.0 ** rng.uniform(-6, 0, count)
    w = z + rho * np.exp(1j * rng.uniform(0, 2 * np.pi, count))
    outside = np.abs(w) > rmax
    w[outside] = w[outside] / np.abs(w[outside]) * rmax
    return z, w


def holder_quotient_max(F: FourierSeries, alpha: float, z: np.ndarray, w: np.ndarray) -> float:
    d = np.abs(z - w)
    keep = d > 0
    fz = poisson_extend(F, z[keep])
    fw = poisson_extend(F, w[keep])
    return float(np.max(np.abs(fz - fw) / d[keep] ** alpha))


def check_holder_continuity(p=2.0, pairs: int = 10_000, seed: int = 0, trials: int = 5,
                            stability: float = 1.5) -> VerificationReport:
    """Smoke test for ``1/q``-Hoelder continuity of ``P[F]``: the largest difference
    quotient over ``pairs`` samples and over ``2 * pairs`` samples must agree within
    the factor ``stability``. Not a proof; observed is the worst ratio of maxima."""
    t0 = time.perf_counter()
    ex = _require_interior(p)
    alpha = 1.0 / ex.q
    params = {"p": ex.p, "alpha": alpha, "pairs": pairs, "trials": trials}
    if pairs <= 0:
        return _vacuous("holder_continuity", params, stability, seed, t0)
    z, w = holder_pairs(seed, 2 * pairs)
    cases = {"abs_t": preset_series("abs_t", 1023)}
    for k, F in enumerate(TrialGenerator(seed + 8).series(trials)):
        cases[f"trial_{k}"] = F
    maxima, worst = {}, 1.0
    for name, F in cases.items():
        m1 = holder_quotient_max(F, alpha, z[:pairs], w[:pairs])
        m2 = max(m1, holder_quotient_max(F, alpha, z[pairs:], w[pairs:]))
        maxima[name] = [m1, m2]
        worst = max(worst, m2 / m1 if m1 > 0 else 1.0)
    params["maxima"] = maxima
    return _finish("holder_continuity", params, worst, stability, worst <= stability, seed, t0)


def check_kernel_moment(exponents=(0.5, 1.0, 2.0, 3.0), radii=(0.0, 0.5, 0.9, 0.99),
                        angles=(0.0, 1.0, 2.0), log_radii=(0.9, 0.99, 0.999),
                        bracket=(0.2, 5.0), constant_scale: float = 1.0) -> VerificationReport:
    """``I_a(z) <= Gamma(a)/Gamma(a/2+1/2)^2 (1-|z|^2)^{-a}`` on a grid, and the
    borderline moment measured against ``log 1/(1-r^2)``."""
    t0 = time.perf_counter()
    ratios = []
    for a in exponents:
        for r in radii:
            for th in angles:
                ratios.append(kernel_moment(a, r * np.exp(1j * th)) / kernel_moment_bound(a, r))
    ratios = np.array(ratios)
    bound = constant_scale
    holds = bool(np.all(ratios <= bound * (1 + 1e-9)))
    mutation_caught = bool(np.any(ratios > MUTATION_SCALE * bound * (1 + 1e-9)))
    log_ratios = [log_kernel_mean(r) / math.log(1 / (1 - r * r)) for r in log_radii]
    in_bracket = all(bracket[0] <= x <= bracket[1] for x in log_ratios)
    params = {"exponents": list(exponents), "radii": list(radii), "angles": list(angles),
              "log_radii": list(log_radii), "log_ratios": log_ratios, "bracket": list(bracket),
              "mutation_caught": mutation_caught, "constant_scale": constant_scale}
    return _finish("kernel_moment", params, ratios.max(), bound,
                   holds and mutation_caught and in_bracket, None, t0)


def check_bergman_membership(exponents=(1.0, 2.0, 4.0), N: int = EXAMPLE_N,
                             tolerance: float = 1e-4) -> VerificationReport:
    """For ``F = |t|``: ``||f_z||_{B^p}`` finite and stable under doubling of the radial
    nodes and angular panels, while ``M_inf(r, f_z)`` keeps growing toward the circle."""
    t0 = time.perf_counter()
    fz = dz_series(preset_series("abs_t", N))
    base_M = max(1024, 1 << math.ceil(math.log2(4 * (2 * N + 1))))
    values, drift = {}, 0.0
    divergent = False
    for p in exponents:
        coarse = bergman_norm(fz, p, nodes=16, M=base_M)
        fine = bergman_norm(fz, p, nodes=32, M=2 * base_M)
        values[str(p)] = [coarse.value, fine.value]
        drift = max(drift, abs(coarse.value - fine.value))
        divergent = divergent or coarse.divergent or fine.divergent
    radii = [1 - 2.0 ** -k for k in range(1, 12)]
    sup = hardy_norm(fz, math.inf, radii=radii)
    incs = np.diff(sup.details["means"])
    step = math.log(2) / math.pi
    # a bounded function would show increments shrinking geometrically
    grows = bool(np.all(incs[4:] >= 0.5 * step))
    params = {"N": N, "bergman": values, "hardy_inf_radii": radii,
              "hardy_inf_means": sup.details["means"], "divergent_flag": divergent,
              "hardy_inf_growing": grows, "tolerance": tolerance}
    ok = drift <= tolerance and not divergent and grows
    return _finish("bergman_membership", params, drift, tolerance, ok, None, t0)


# per-operation tolerances for spectral vs quadrature agreement
ORACLE_PANELS = 1 << 17
ORACLE_TOLERANCES = {
    "smooth": {"poisson": 1e-9, "cauchy": 1e-9, "conjugate": 1e-9, "hilbert": 1e-9},
    "kink": {"poisson": 1e-6, "cauchy": 1e-6, "conjugate": 1e-6, "hilbert": 1e-6},
    "jump": {"poisson": 1e-5, "cauchy": 1e-5, "conjugate": 1e-5, "hilbert": 1e-3},
}
ORACLE_PRESETS = (
    ("abs_t", 4095, "kink"),
    ("square_wave", EXAMPLE_N, "jump"),
    ("poisson_boundary", 64, "smooth"),
    ("harmonic:3", 8, "smooth"),
    ("harmonic:-2", 8, "smooth"),
    ("cos:2", 8, "smooth"),
    ("sin:5", 8, "smooth"),
    ("constant", 4, "smooth"),
)


def oracle_errors(series: FourierSeries, evaluate: Callable, zs: np.ndarray, thetas: np.ndarray,
                  M: int) -> dict:
    """Max |spectral - quadrature| per operator."""
    return {
        "poisson": float(np.max(np.abs(poisson_extend(series, zs)
                                       - poisson_quadrature_oracle(evaluate, zs, M).value))),
        "cauchy": float(np.max(np.abs(riesz_projection(series).evaluate(zs)
                                      - cauchy_integral_oracle(evaluate, zs, M).value))),
        "conjugate": float(np.max(np.abs(poisson_extend(conjugate_function(series), zs)
                                         - conjugate_extension_quadrature(evaluate, zs, M).value))),
        "hilbert": float(np.max(np.abs(hilbert_transform(series).evaluate(thetas)
                                       - pv_hilbert_oracle(evaluate, thetas, M).value))),
    }


def check_oracle_agreement(trials: int = 100, seed: int = 0, points: int = 20) -> VerificationReport:
    """Spectral and quadrature paths agree on every preset and on random polynomials.

    Hilbert-transform angles avoid a 0.1-neighbourhood of the preset jumps at 0
    and pi, where the truncated series converges only like ``1/(N dist)``.
    ``observed`` is the worst error/tolerance ratio (bound 1).
    """
    t0 = time.perf_counter()
    params = {"trials": trials, "points": points, "panels": ORACLE_PANELS,
              "tolerances": ORACLE_TOLERANCES}
    zs = disc_points(seed, points)
    rng = np.random.default_rng(seed + 11)
    thetas = rng.uniform(0.1, np.pi - 0.1, points) * rng.choice([-1.0, 1.0], points)
    worst, per_case = 0.0, {}
    for name, N, kind in ORACLE_PRESETS:
        errs = oracle_errors(preset_series(name, N), preset_evaluator(name, N), zs, thetas,
                             ORACLE_PANELS)
        per_case[name] = errs
        worst = max(worst, max(errs[k] / ORACLE_TOLERANCES[kind][k] for k in errs))
    trial_worst = {k: 0.0 for k in ORACLE_TOLERANCES["smooth"]}
    for F in TrialGenerator(seed + 12).series(trials):
        ev = lambda t, F=F: np.asarray(F.evaluate(t))
        errs = oracle_errors(F, ev, zs, thetas, 4096)
        for k, e in errs.items():
            trial_worst[k] = max(trial_worst[k], e)
    worst = max(worst, max(trial_worst[k] / ORACLE_TOLERANCES["smooth"][k] for k in trial_worst))
    params.update(presets=per_case, random_trials=trial_worst)
    return _finish("oracle_agreement", params, worst, 1.0, worst <= 1.0, seed, t0)


# ---------------------------------------------------------------------------
# suite

@dataclass
class SuiteConfig:
    """Parameters for :func:`run_all`; ``trials`` overrides every trial count when set."""

    seed: int = 42
    trials: int | None = None
    riesz_exponents: tuple = (1.5, 2.0, 3.0, 4.0)
    riesz_trials: int = 200
    main_trials: int = 500
    identity_trials: int = 100
    points: int = 20
    pointwise_exponents: tuple = (1.5, 2.0, 3.0)
    pointwise_trials: int = 50
    jensen_exponents: tuple = (1.0, 2.0, 3.0)
    jensen_trials: int = 20
    holder_pairs: int = 10_000
    oracle_trials: int = 100
    riesz_constant_scale: float = 1.0
    record_runtime: bool = True

    def count(self, default: int) -> int:
        return default if self.trials is None else self.trials


CHECK_NAMES = ("riesz", "main_theorem", "identity", "polar_lemma", "endpoint", "pointwise",
               "jensen", "holder", "kernel_moment", "bergman", "oracles")


def _suite_jobs(config: SuiteConfig, only: str | None = None) -> list[tuple[str, Callable[[], VerificationReport]]]:
    c, s = config, config.seed
    jobs: list[tuple[str, Callable]] = []
    for p in c.riesz_exponents:
        jobs.append(("riesz", lambda p=p: check_riesz_inequality(
            p, c.count(c.riesz_trials), s, constant_scale=c.riesz_constant_scale)))
    for p in c.riesz_exponents:
        jobs.append(("main_theorem", lambda p=p: check_main_theorem_lp(
            p, c.count(c.main_trials if p == 2.0 else c.riesz_trials), s)))
    jobs.append(("identity", lambda: check_identity_2izfz(c.count(c.identity_trials), s, c.points)))
    jobs.append(("polar_lemma", lambda: check_polar_lemma(c.count(c.identity_trials), s, c.points)))
    jobs.append(("endpoint", check_endpoint_failure))
    for p in c.pointwise_exponents:
        jobs.append(("pointwise", lambda p=p: check_pointwise_bound(p, c.count(c.pointwise_trials), s)))
    for p in c.jensen_exponents:
        jobs.append(("jensen", lambda p=p: check_jensen_step(p, c.count(c.jensen_trials), s)))
    jobs.append(("holder", lambda: check_holder_continuity(
        2.0, c.holder_pairs if c.trials is None else c.trials, s)))
    jobs.append(("kernel_moment", check_kernel_moment))
    jobs.append(("bergman", check_bergman_membership))
    jobs.append(("oracles", lambda: check_oracle_agreement(c.count(c.oracle_trials), s, c.points)))
    if only is not None and only != "all":
        if only not in CHECK_NAMES:
            raise KeyError(f"unknown check {only!r}; available: {', '.join(CHECK_NAMES)}, all")
        jobs = [j for j in jobs if j[0] == only]
    return jobs


def run_all(config: SuiteConfig | None = None, only: str | None = None) -> list[VerificationReport]:
    """Run every check (or the group ``only``); errors become failed reports."""
    config = config or SuiteConfig()
    reports = []
    for name, job in _suite_jobs(config, only):
        t0 = time.perf_counter()
        try:
            rep = job()
        except Exception as exc:  # noqa: BLE001 - a crashing check is a failed check
            rep = _finish(name, {"error": f"{type(exc).__name__}: {exc}"}, math.nan, math.nan,
                          False, config.seed, t0)
            rep.observed = rep.bound = rep.margin = 0.0
        if not config.record_runtime:
            rep.runtime_ms = 0.0
        reports.append(rep)
    return reports


def all_passed(reports) -> bool:
    return all(r.passed for r in reports)
