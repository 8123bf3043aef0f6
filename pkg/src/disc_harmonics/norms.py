"""Norms on the circle and in the disc, kernel moments, and the sharp constants.

All angular integrals are trapezoid rules on the uniform grid (spectrally
accurate for smooth periodic integrands); radial integrals for Bergman norms
use Gauss-Legendre panels that crowd toward the boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np

from disc_harmonics.boundary import FourierSeries, is_power_of_two, uniform_grid
from disc_harmonics.disc_ops import AnalyticSeries, DiscPoint
from disc_harmonics.exceptions import DomainError
from disc_harmonics.special import gamma

DiscFunction = Union[FourierSeries, AnalyticSeries, Callable[[np.ndarray], np.ndarray]]

DEFAULT_HARDY_RADII = tuple(1.0 - 2.0 ** -k for k in range(1, 13))
MAX_CALLABLE_PANELS = 1 << 18


@dataclass(frozen=True)
class Exponent:
    """Lebesgue exponent ``p`` in ``[1, inf]`` with its conjugate ``q``."""

    p: float

    def __post_init__(self):
        p = float(self.p)
        if math.isnan(p) or p < 1.0:
            raise DomainError(f"exponent must satisfy p >= 1, got {self.p}")
        object.__setattr__(self, "p", p)

    @property
    def infinite(self) -> bool:
        return math.isinf(self.p)

    @property
    def q(self) -> float:
        if self.infinite:
            return 1.0
        if self.p == 1.0:
            return math.inf
        return self.p / (self.p - 1.0)


def as_exponent(p) -> Exponent:
    return p if isinstance(p, Exponent) else Exponent(p)


@dataclass
class NormValue:
    value: float
    method: str
    error: float = 0.0
    lower_bound: bool = False
    divergent: bool = False
    details: dict = field(default_factory=dict)

    def __float__(self):
        return float(self.value)


def _next_pow2(x: float) -> int:
    return 1 << max(2, math.ceil(math.log2(max(x, 4))))


def _series_of(f) -> FourierSeries | None:
    if isinstance(f, FourierSeries):
        return f
    if isinstance(f, AnalyticSeries):
        return f.as_fourier()
    return None


def default_panels(f: DiscFunction, r: float = 1.0) -> int:
    """Panel count used when the caller gives none.

    Series are oversampled four times past their degree; closures get 64
    panels per kernel width ``1 - r`` (capped at 2**18).
    """
    s = _series_of(f)
    if s is not None:
        return max(1024, _next_pow2(4 * (2 * s.degree + 1)))
    if r >= 1.0:
        return 4096
    return min(MAX_CALLABLE_PANELS, max(1024, _next_pow2(64.0 / (1.0 - r))))


def _check_panels(M: int):
    if not is_power_of_two(M) or M < 4:
        raise ValueError(f"panel count must be a power of two >= 4, got {M}")


def _circle_values(f: DiscFunction, r: float, M: int) -> np.ndarray:
    s = _series_of(f)
    if s is not None:
        if M < 2 * s.degree + 1:
            raise ValueError(f"M={M} aliases a degree-{s.degree} series; need M >= {2 * s.degree + 1}")
        return s.samples(M, r)
    z = r * np.exp(1j * uniform_grid(M))
    return np.asarray(f(z), dtype=complex)


def _lp_from_values(values: np.ndarray, ex: Exponent) -> tuple[float, float]:
    """(norm on the full grid, norm on every other node)."""
    a = np.abs(values)
    if ex.infinite:
        return float(np.max(a)), float(np.max(a[::2]))
    full = float(np.mean(a ** ex.p)) ** (1.0 / ex.p)
    half = float(np.mean(a[::2] ** ex.p)) ** (1.0 / ex.p)
    return full, half


def circle_lp_norm(phi, p, M: int | None = None) -> NormValue:
    """Normalised ``L^p`` norm on the circle of a series or a circle evaluator ``theta -> phi``."""
    ex = as_exponent(p)
    if M is None:
        M = default_panels(phi, 1.0)
    _check_panels(M)
    s = _series_of(phi)
    if s is not None:
        values = _circle_values(s, 1.0, M)
    else:
        values = np.asarray(phi(uniform_grid(M)), dtype=complex)
    full, half = _lp_from_values(values, ex)
    if ex.infinite:
        return NormValue(full, "grid-sup", error=abs(full - half), lower_bound=True,
                         details={"M": M})
    return NormValue(full, f"quadrature({M})", error=abs(full - half), details={"M": M})


def integral_mean(f: DiscFunction, r: float, p, M: int | None = None) -> NormValue:
    """``M_p(r, f)``; spectral input at ``p = 2`` is cross-checked against Parseval."""
    ex = as_exponent(p)
    if not 0.0 <= r < 1.0:
        raise DomainError(f"radius must satisfy 0 <= r < 1, got {r}")
    if M is None:
        M = default_panels(f, r)
    _check_panels(M)
    values = _circle_values(f, r, M)
    full, half = _lp_from_values(values, ex)
    out = NormValue(full, "grid-sup" if ex.infinite else f"quadrature({M})",
                    error=abs(full - half), lower_bound=ex.infinite, details={"M": M, "r": r})
    s = _series_of(f)
    if s is not None and ex.p == 2.0:
        weights = np.power(r, 2 * np.abs(s.indices))
        parseval = math.sqrt(float(np.sum(np.abs(s.coeffs) ** 2 * weights)))
        out.details["parseval"] = parseval
        out.error = max(out.error, abs(parseval - full))
    return out


def hardy_norm(f: DiscFunction, p, radii=DEFAULT_HARDY_RADII, M: int | None = None) -> NormValue:
    """Grid supremum of ``M_p(r, f)`` over ``radii`` (a lower bound for the Hardy norm).

    ``details["means"]`` holds the per-radius table; ``details["monotone"]``
    records whether the means increased with ``r`` as they must for
    harmonic ``f`` (a violation means an under-resolved quadrature).
    """
    ex = as_exponent(p)
    radii = [float(r) for r in radii]
    if not radii:
        raise ValueError("empty radius grid")
    if any(b <= a for a, b in zip(radii, radii[1:])):
        raise ValueError("radii must be strictly increasing")
    if radii[-1] >= 1.0 or radii[0] < 0.0:
        raise DomainError("radii must lie in [0, 1)")
    means = [integral_mean(f, r, ex, M) for r in radii]
    vals = [m.value for m in means]
    monotone = all(b >= a * (1 - 1e-9) - 1e-14 for a, b in zip(vals, vals[1:]))
    k = int(np.argmax(vals))
    details = {"radii": radii, "means": vals, "monotone": monotone, "r_max": radii[k]}
    if "parseval" in means[k].details:
        details["parseval"] = means[k].details["parseval"]
    return NormValue(vals[k], "grid-sup(radii)", error=means[k].error, lower_bound=True,
                     details=details)


def _gauss_panels(levels: int, nodes: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes/weights on [0,1] split at 1 - 2^-j, j = 1..levels."""
    x, w = np.polynomial.legendre.leggauss(nodes)
    edges = [0.0] + [1.0 - 2.0 ** -j for j in range(1, levels + 1)] + [1.0]
    rs, ws, panel = [], [], []
    for i, (a, b) in enumerate(zip(edges, edges[1:])):
        rs.append(0.5 * (b - a) * x + 0.5 * (a + b))
        ws.append(0.5 * (b - a) * w)
        panel.append(np.full(nodes, i))
    return np.concatenate(rs), np.concatenate(ws), np.concatenate(panel)


def bergman_norm(f: DiscFunction, p, nodes: int = 16, levels: int = 10,
                 M: int | None = None) -> NormValue:
    """``(2 int_0^1 r M_p(r,f)^p dr)^{1/p}``, normalised so that ``f = 1`` gives 1.

    ``p = inf`` falls back to the Hardy sup form. The value is flagged
    divergent when the outermost radial panel carries most of the mass.
    """
    ex = as_exponent(p)
    if ex.infinite:
        return hardy_norm(f, ex, M=M)
    rs, ws, panel = _gauss_panels(levels, nodes)
    integrand = np.empty(rs.size)
    for i, r in enumerate(rs):
        Mi = M if M is not None else default_panels(f, r)
        integrand[i] = float(np.mean(np.abs(_circle_values(f, float(r), Mi)) ** ex.p))
    contrib = 2.0 * rs * integrand * ws
    total = float(np.sum(contrib))
    outer = float(np.sum(contrib[panel == panel.max()]))
    divergent = not math.isfinite(total) or (total > 0 and outer > 0.5 * total)
    return NormValue(total ** (1.0 / ex.p), f"gauss-legendre({levels + 1}x{nodes})",
                     divergent=divergent,
                     details={"outer_panel_fraction": outer / total if total > 0 else 0.0})


def _kernel_power_mean(power: float, z, M: int | None) -> float:
    pts = z.z if isinstance(z, DiscPoint) else complex(z)
    r = abs(pts)
    if r >= 1.0:
        raise DomainError(f"kernel moments need |z| < 1, got {r}")
    if M is None:
        M = max(1024, _next_pow2(64.0 / (1.0 - r)))
    t = uniform_grid(M)
    return float(np.mean(np.abs(1.0 - pts * np.exp(-1j * t)) ** (-power)))


def kernel_moment(a: float, z, M: int | None = None) -> float:
    """``I_a(z) = (1/2pi) int dt / |1 - z e^{-it}|^{a+1}`` for ``a > 0``."""
    if not a > 0:
        raise DomainError(f"kernel moment needs a > 0, got {a}")
    return _kernel_power_mean(a + 1.0, z, M)


def log_kernel_mean(z, M: int | None = None) -> float:
    """The borderline moment ``(1/2pi) int dt / |1 - z e^{-it}|``, which grows like
    ``log 1/(1 - |z|^2)``."""
    return _kernel_power_mean(1.0, z, M)


def kernel_moment_bound(a: float, r: float) -> float:
    """``Gamma(a) / Gamma(a/2 + 1/2)^2 * (1 - r^2)^{-a}``."""
    if not a > 0:
        raise DomainError(f"kernel moment bound needs a > 0, got {a}")
    if not 0.0 <= r < 1.0:
        raise DomainError(f"radius must satisfy 0 <= r < 1, got {r}")
    return gamma(a) / gamma(0.5 * a + 0.5) ** 2 * (1.0 - r * r) ** (-a)


def riesz_constant(p) -> float:
    """Best constant ``csc(pi/p)`` of the Riesz projection on ``L^p``, ``1 < p < inf``."""
    ex = as_exponent(p)
    if ex.p == 1.0 or ex.infinite:
        raise DomainError("the Riesz projection is unbounded on L^1 and L^inf "
                          "(see check_endpoint_failure)")
    return 1.0 / math.sin(math.pi / ex.p)


def pointwise_constant(p) -> float:
    """``C_p = (Gamma(q-1) / Gamma(q/2)^2)^{1/q}`` with ``q`` conjugate to ``p``."""
    ex = as_exponent(p)
    if ex.p == 1.0 or ex.infinite:
        raise DomainError("pointwise constant is defined for 1 < p < inf only")
    q = ex.q
    return (gamma(q - 1.0) / gamma(0.5 * q) ** 2) ** (1.0 / q)
