"""Operators on harmonic functions in the unit disc.

Every operator has a spectral path acting on Fourier coefficients and an
independent trapezoid-rule oracle acting on a circle evaluator, so that a
disagreement between the two points at a bug rather than at the theory.

Points may be given as a :class:`DiscPoint`, a complex number, or an array
of complex numbers; results follow the input shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from disc_harmonics.boundary import _CHUNK_ENTRIES, FourierSeries, uniform_grid
from disc_harmonics.exceptions import DomainError

CircleEvaluator = Callable[[np.ndarray], np.ndarray]

ORACLE_MAX_RADIUS = 1.0 - 1e-6
# panels per kernel width (1 - r) demanded by the quadrature oracles
ORACLE_MIN_RESOLUTION = 8.0


@dataclass(frozen=True)
class DiscPoint:
    r: float
    theta: float

    def __post_init__(self):
        if not (np.isfinite(self.r) and np.isfinite(self.theta)):
            raise DomainError("disc point coordinates must be finite")
        if not 0.0 <= self.r < 1.0:
            raise DomainError(f"radius must satisfy 0 <= r < 1, got r={self.r}")

    @property
    def z(self) -> complex:
        return complex(self.r * np.cos(self.theta), self.r * np.sin(self.theta))

    @classmethod
    def from_complex(cls, z: complex) -> "DiscPoint":
        return cls(float(abs(z)), float(np.angle(z)))


class OracleValue(NamedTuple):
    """Quadrature result with the difference against the half-panel rule as error estimate."""

    value: complex | np.ndarray
    error: float | np.ndarray


def _as_points(z) -> tuple[np.ndarray, tuple | None]:
    """Flatten ``z`` to a complex array; the returned shape is None for a single point."""
    if isinstance(z, DiscPoint):
        return np.array([z.z]), None
    if isinstance(z, (list, tuple)) and z and isinstance(z[0], DiscPoint):
        return np.array([p.z for p in z]), (len(z),)
    arr = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(arr)):
        raise DomainError("disc points must be finite")
    if np.any(np.abs(arr) >= 1.0):
        raise DomainError("disc points must satisfy |z| < 1")
    return arr.ravel(), (None if arr.ndim == 0 else arr.shape)


def _reshape(shape, values: np.ndarray):
    if shape is None:
        v = values[0]
        return complex(v) if np.iscomplexobj(values) else float(v)
    return values.reshape(shape)


def _sum_terms(coeffs: np.ndarray, indices: np.ndarray, pts: np.ndarray) -> np.ndarray:
    """``sum_n coeffs_n r^{|n|} e^{i n theta}`` at each point (reductions are pairwise)."""
    r = np.abs(pts)
    theta = np.angle(pts)
    absn = np.abs(indices)
    out = np.empty(pts.size, dtype=complex)
    step = max(1, _CHUNK_ENTRIES // max(indices.size, 1))
    for start in range(0, pts.size, step):
        rr = r[start:start + step, None]
        tt = theta[start:start + step, None]
        terms = np.power(rr, absn) * np.exp(1j * tt * indices) * coeffs
        out[start:start + step] = np.sum(terms, axis=1)
    return out


@dataclass(frozen=True, eq=False)
class AnalyticSeries:
    """One-sided Taylor coefficients ``a_0, ..., a_N`` of ``sum a_n z^n``."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex).ravel()
        if c.size == 0:
            c = np.zeros(1, dtype=complex)
        if not np.all(np.isfinite(c)):
            raise ValueError("Taylor coefficients must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def coef(self, n: int) -> complex:
        return complex(self.coeffs[n]) if 0 <= n <= self.degree else 0j

    def evaluate(self, z):
        pts, shape = _as_points(z)
        return _reshape(shape, _sum_terms(self.coeffs, np.arange(self.coeffs.size), pts))

    def as_fourier(self) -> FourierSeries:
        """Two-sided series with zero negative frequencies (same function in the disc)."""
        N = self.degree
        c = np.zeros(2 * N + 1, dtype=complex)
        c[N:] = self.coeffs
        return FourierSeries(c)

    def __repr__(self):
        return f"AnalyticSeries(degree={self.degree})"


# ---------------------------------------------------------------------------
# spectral operators

def poisson_extend(phi: FourierSeries, z):
    """Harmonic extension ``P[phi](z) = sum c_n r^{|n|} e^{in theta}``."""
    pts, shape = _as_points(z)
    return _reshape(shape, _sum_terms(phi.coeffs, phi.indices, pts))


def riesz_projection(f: FourierSeries) -> AnalyticSeries:
    """Analytic part ``sum_{n>=0} c_n z^n``."""
    return AnalyticSeries(f.coeffs[f.degree:].copy())


def conjugate_function(f: FourierSeries) -> FourierSeries:
    """Harmonic conjugate via the multiplier ``-i sign(n)``; the mean is dropped."""
    m = -1j * np.sign(f.indices)
    return FourierSeries(m * f.coeffs, real_valued=f.real_valued)


def hilbert_transform(phi: FourierSeries) -> FourierSeries:
    """Hilbert transform on the circle; the boundary trace of :func:`conjugate_function`."""
    return conjugate_function(phi)


def conjugate_poisson_kernel(z) -> float | np.ndarray:
    """``Im (1+z)/(1-z) = 2 r sin(theta) / (1 + r^2 - 2 r cos(theta))``."""
    pts, shape = _as_points(z)
    r, theta = np.abs(pts), np.angle(pts)
    return _reshape(shape, 2 * r * np.sin(theta) / (1 + r * r - 2 * r * np.cos(theta)))


def dz_series(F: FourierSeries) -> AnalyticSeries:
    """Taylor series of ``f_z`` for ``f = P[F]``: ``a_m = (m+1) c_{m+1}``."""
    N = F.degree
    m = np.arange(N)
    return AnalyticSeries((m + 1) * F.coeffs[N + 1:])


def dzbar_series(F: FourierSeries) -> AnalyticSeries:
    """Series of ``f_zbar`` in powers of ``conj(z)``: ``b_m = (m+1) c_{-(m+1)}``."""
    N = F.degree
    m = np.arange(N)
    return AnalyticSeries((m + 1) * F.coeffs[:N][::-1])


def dzbar_conj_series(F: FourierSeries) -> AnalyticSeries:
    """Taylor series of the analytic function ``conj(f_zbar)``."""
    return AnalyticSeries(np.conj(dzbar_series(F).coeffs))


def wirtinger_dz(f_boundary: FourierSeries, z):
    """``f_z`` of ``f = P[F]``, given the series of ``F`` itself."""
    return dz_series(f_boundary).evaluate(z)


def wirtinger_dzbar(f_boundary: FourierSeries, z):
    """``f_zbar`` of ``f = P[F]``, given the series of ``F`` itself."""
    pts, shape = _as_points(z)
    return _reshape(shape, dzbar_series(f_boundary).evaluate(np.conj(pts)))


def polar_derivative_series(F: FourierSeries) -> tuple[FourierSeries, FourierSeries]:
    """Extension coefficients of ``f_theta`` and ``r f_r``.

    Assembled from the Wirtinger parts ``z f_z`` (coefficients ``n c_n``,
    ``n >= 1``) and ``zbar f_zbar`` (``|n| c_n``, ``n <= -1``).
    """
    n = F.indices
    z_fz = np.where(n > 0, n * F.coeffs, 0)
    zbar_fzbar = np.where(n < 0, -n * F.coeffs, 0)
    theta = FourierSeries(1j * (z_fz - zbar_fzbar), real_valued=F.real_valued)
    rfr = FourierSeries(z_fz + zbar_fzbar, real_valued=F.real_valued)
    return theta, rfr


def polar_derivatives(f_boundary: FourierSeries, z):
    """``(f_theta, r f_r)`` at ``z`` from ``f_theta = i(z f_z - zbar f_zbar)``
    and ``r f_r = z f_z + zbar f_zbar``."""
    pts, shape = _as_points(z)
    fz = wirtinger_dz(f_boundary, pts)
    fzb = wirtinger_dzbar(f_boundary, pts)
    f_theta = 1j * (pts * fz - np.conj(pts) * fzb)
    rf_r = pts * fz + np.conj(pts) * fzb
    return _reshape(shape, f_theta), _reshape(shape, rf_r)


def conjugate_identity_check(phi: FourierSeries, z, allow_mean: bool = False):
    """Residual of ``P[phi] + i P~[phi] = -c_0 + 2 P_+(phi)`` at ``z``.

    With zero-mean data (``phi`` a derivative) the constant vanishes; other
    data are refused unless ``allow_mean`` is set.
    """
    c0 = phi.mean
    if c0 != 0 and not allow_mean:
        raise ValueError("data has nonzero mean; the identity then carries the constant -c_0 "
                         "(pass allow_mean=True)")
    pts, shape = _as_points(z)
    lhs = poisson_extend(phi, pts) + 1j * poisson_extend(conjugate_function(phi), pts)
    rhs = -c0 + 2 * riesz_projection(phi).evaluate(pts)
    return _reshape(shape, np.abs(lhs - rhs))


# ---------------------------------------------------------------------------
# quadrature oracles

def _check_oracle_domain(pts: np.ndarray, M: int):
    if M < 4 or M % 2:
        raise ValueError(f"panel count must be even and >= 4, got {M}")
    rmax = float(np.max(np.abs(pts))) if pts.size else 0.0
    if rmax > ORACLE_MAX_RADIUS:
        raise DomainError(f"r={rmax} too close to the circle for quadrature (limit 1 - 1e-6)")
    if (1.0 - rmax) * M < ORACLE_MIN_RESOLUTION:
        raise DomainError(f"r={rmax} needs at least {int(np.ceil(ORACLE_MIN_RESOLUTION / (1 - rmax)))} "
                          f"panels, got M={M}")


def _trapezoid(kernel: Callable[[np.ndarray, np.ndarray], np.ndarray],
               phi_eval: CircleEvaluator, z, M: int) -> OracleValue:
    pts, shape = _as_points(z)
    _check_oracle_domain(pts, M)
    t = uniform_grid(M)
    phi = np.asarray(phi_eval(t), dtype=complex)
    full = np.empty(pts.size, dtype=complex)
    half = np.empty(pts.size, dtype=complex)
    step = max(1, _CHUNK_ENTRIES // M)
    for start in range(0, pts.size, step):
        block = kernel(pts[start:start + step, None], t[None, :]) * phi
        full[start:start + step] = np.mean(block, axis=1)
        half[start:start + step] = np.mean(block[:, ::2], axis=1)
    return OracleValue(_reshape(shape, full), _reshape(shape, np.abs(full - half)))


def _poisson_kernel(z, t):
    w = 1.0 - z * np.exp(-1j * t)
    return (1.0 - np.abs(z) ** 2) / (w.real ** 2 + w.imag ** 2)


def _conj_poisson_kernel(z, t):
    r, s = np.abs(z), np.angle(z) - t
    return 2 * r * np.sin(s) / (1 + r * r - 2 * r * np.cos(s))


def _cauchy_kernel(z, t):
    return 1.0 / (1.0 - z * np.exp(-1j * t))


def poisson_quadrature_oracle(phi_eval: CircleEvaluator, z, M: int = 4096) -> OracleValue:
    """Trapezoid rule for ``(1/2pi) int P(z e^{-it}) phi(e^{it}) dt``."""
    return _trapezoid(_poisson_kernel, phi_eval, z, M)


def conjugate_extension_quadrature(phi_eval: CircleEvaluator, z, M: int = 4096) -> OracleValue:
    """Trapezoid rule for ``(1/2pi) int P~(z e^{-it}) phi(e^{it}) dt``."""
    return _trapezoid(_conj_poisson_kernel, phi_eval, z, M)


def cauchy_integral_oracle(phi_eval: CircleEvaluator, z, M: int = 4096) -> OracleValue:
    """Trapezoid rule for ``(1/2 pi i) int_T phi(w)/(w - z) dw``."""
    return _trapezoid(_cauchy_kernel, phi_eval, z, M)


def _pv_sum(phi_eval: CircleEvaluator, theta: np.ndarray, M: int) -> np.ndarray:
    h = 2 * np.pi / M
    s = (np.arange(M) + 0.5) * h
    cot = 1.0 / np.tan(s / 2)
    out = np.empty(theta.size, dtype=complex)
    step = max(1, _CHUNK_ENTRIES // M)
    for start in range(0, theta.size, step):
        nodes = theta[start:start + step, None] - s[None, :]
        vals = np.asarray(phi_eval(nodes), dtype=complex).reshape(nodes.shape)
        out[start:start + step] = np.mean(vals * cot, axis=1)
    return out


def pv_hilbert_oracle(phi_eval: CircleEvaluator, theta, M: int = 4096) -> OracleValue:
    """Principal value ``(1/2pi) p.v. int phi(t) cot((theta - t)/2) dt``.

    Nodes sit at ``theta - (j + 1/2) 2pi/M`` so the singularity falls midway
    between two of them and the odd kernel cancels in symmetric pairs.
    """
    if M < 4 or M % 2:
        raise ValueError(f"panel count must be even and >= 4, got {M}")
    th = np.atleast_1d(np.asarray(theta, dtype=float)).ravel()
    full = _pv_sum(phi_eval, th, M)
    half = _pv_sum(phi_eval, th, M // 2)
    err = np.abs(full - half)
    if np.ndim(theta) == 0:
        return OracleValue(complex(full[0]), float(err[0]))
    return OracleValue(full.reshape(np.shape(theta)), err.reshape(np.shape(theta)))

