"""Boundary functions on the unit circle as truncated two-sided Fourier series.

Coefficient ``c_n`` of a degree-``N`` series is stored at array position
``n + N``. Sample grids are uniform, ``theta_j = 2*pi*j/M`` with ``j`` from 0.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np
import scipy.fft

from disc_harmonics.exceptions import SpecError

REAL_TOL = 1e-12
# cap on (points x coefficients) entries materialised at once by direct sums
_CHUNK_ENTRIES = 1 << 22


def fft_workers() -> int:
    """Worker count for scipy.fft from DISC_HARMONICS_THREADS (0 or unset = all cores)."""
    raw = os.environ.get("DISC_HARMONICS_THREADS", "0").strip() or "0"
    try:
        n = int(raw)
    except ValueError:
        n = 0
    return -1 if n <= 0 else n


def is_power_of_two(m: int) -> bool:
    return m > 0 and (m & (m - 1)) == 0


def uniform_grid(M: int) -> np.ndarray:
    return 2.0 * np.pi * np.arange(M) / M


@dataclass(frozen=True, eq=False)
class FourierSeries:
    """Finite two-sided Fourier series ``sum_{|n|<=N} c_n e^{in theta}``.

    The same coefficients describe the harmonic extension
    ``sum c_n r^{|n|} e^{in theta}`` into the disc.
    """

    coeffs: np.ndarray
    real_valued: bool = False

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex).ravel()
        if c.size % 2 != 1:
            raise ValueError(f"need an odd number (2N+1) of coefficients, got {c.size}")
        if not np.all(np.isfinite(c)):
            raise ValueError("Fourier coefficients must be finite")
        if self.real_valued:
            mirror = np.conj(c[::-1])
            scale = max(1.0, float(np.max(np.abs(c))))
            if np.max(np.abs(c - mirror)) > REAL_TOL * scale:
                raise ValueError("series flagged real_valued violates c_{-n} = conj(c_n)")
            c = 0.5 * (c + mirror)
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zeros(cls, N: int, real_valued: bool = False) -> "FourierSeries":
        return cls(np.zeros(2 * N + 1, dtype=complex), real_valued=real_valued)

    @classmethod
    def from_dict(cls, terms: Mapping[int, complex], N: int | None = None,
                  real_valued: bool = False) -> "FourierSeries":
        """Sparse construction; omitted indices are zero."""
        if N is None:
            N = max((abs(int(n)) for n in terms), default=0)
        c = np.zeros(2 * N + 1, dtype=complex)
        for n, value in terms.items():
            n = int(n)
            if abs(n) > N:
                raise ValueError(f"index {n} exceeds degree {N}")
            c[n + N] += value
        return cls(c, real_valued=real_valued)

    @property
    def degree(self) -> int:
        return (self.coeffs.size - 1) // 2

    @property
    def indices(self) -> np.ndarray:
        N = self.degree
        return np.arange(-N, N + 1)

    @property
    def mean(self) -> complex:
        return complex(self.coeffs[self.degree])

    def coef(self, n: int) -> complex:
        N = self.degree
        return complex(self.coeffs[n + N]) if abs(n) <= N else 0j

    def resize(self, N: int) -> "FourierSeries":
        """Zero-pad or truncate to degree ``N``."""
        M = self.degree
        if N >= M:
            c = np.zeros(2 * N + 1, dtype=complex)
            c[N - M:N + M + 1] = self.coeffs
        else:
            c = self.coeffs[M - N:M + N + 1]
        return FourierSeries(c, real_valued=self.real_valued)

    def conjugate(self) -> "FourierSeries":
        """Series of the pointwise complex conjugate, conj(c_{-n})."""
        return FourierSeries(np.conj(self.coeffs[::-1]), real_valued=self.real_valued)

    def evaluate(self, theta) -> np.ndarray | complex:
        return evaluate_on_circle(self, theta)

    def samples(self, M: int, r: float = 1.0) -> np.ndarray:
        """Values of the extension on the circle of radius ``r`` at the ``M`` grid angles.

        Coefficients are folded modulo ``M`` and summed by one inverse FFT,
        so any ``M`` works; ``M >= 2N+1`` gives the exact values.
        """
        weights = self.coeffs
        if r != 1.0:
            weights = weights * np.power(float(r), np.abs(self.indices))
        folded = np.zeros(M, dtype=complex)
        np.add.at(folded, np.mod(self.indices, M), weights)
        return M * scipy.fft.ifft(folded, workers=fft_workers())

    def _combine(self, other: "FourierSeries", sign: float) -> "FourierSeries":
        N = max(self.degree, other.degree)
        a, b = self.resize(N), other.resize(N)
        return FourierSeries(a.coeffs + sign * b.coeffs,
                             real_valued=self.real_valued and other.real_valued)

    def __add__(self, other):
        if not isinstance(other, FourierSeries):
            return NotImplemented
        return self._combine(other, 1.0)

    def __sub__(self, other):
        if not isinstance(other, FourierSeries):
            return NotImplemented
        return self._combine(other, -1.0)

    def __mul__(self, scalar):
        if isinstance(scalar, FourierSeries):
            return NotImplemented
        scalar = complex(scalar)
        return FourierSeries(self.coeffs * scalar,
                             real_valued=self.real_valued and scalar.imag == 0)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1.0

    def __repr__(self):
        return f"FourierSeries(degree={self.degree}, real_valued={self.real_valued})"


def evaluate_on_circle(F: FourierSeries, theta) -> np.ndarray | complex:
    """``sum_n c_n e^{in theta}`` at arbitrary angles (scalar or array)."""
    scalar = np.ndim(theta) == 0
    th = np.atleast_1d(np.asarray(theta, dtype=float)).ravel()
    if not np.all(np.isfinite(th)):
        raise ValueError("angles must be finite")
    n = F.indices
    out = np.empty(th.size, dtype=complex)
    step = max(1, _CHUNK_ENTRIES // n.size)
    for start in range(0, th.size, step):
        block = th[start:start + step]
        phases = np.exp(1j * np.outer(block, n))
        out[start:start + step] = np.sum(phases * F.coeffs, axis=1)
    if scalar:
        return complex(out[0])
    return out.reshape(np.shape(theta))


def series_from_samples(samples: Sequence[complex], N: int) -> FourierSeries:
    """Discrete Fourier coefficients ``|n| <= N`` of uniform samples.

    Exact to roundoff for trigonometric polynomials of degree <= N when
    ``M >= 2N + 2``.
    """
    s = np.asarray(samples, dtype=complex).ravel()
    M = s.size
    if N < 0:
        raise ValueError("degree must be nonnegative")
    if M < 2 * N + 2:
        raise ValueError(f"{M} samples cannot resolve degree {N}; need M >= {2 * N + 2}")
    if not np.all(np.isfinite(s)):
        raise ValueError("samples must be finite")
    spectrum = scipy.fft.fft(s, workers=fft_workers()) / M
    n = np.arange(-N, N + 1)
    return FourierSeries(spectrum[np.mod(n, M)])


def boundary_derivative(F: FourierSeries) -> FourierSeries:
    """d/dt of the boundary function: ``c_n -> i n c_n``."""
    return FourierSeries(1j * F.indices * F.coeffs, real_valued=F.real_valued)


# ---------------------------------------------------------------------------
# presets

def _wrap(theta) -> np.ndarray:
    """Angles mapped into [-pi, pi)."""
    return np.mod(np.asarray(theta, dtype=float) + np.pi, 2 * np.pi) - np.pi


def _abs_t_coeffs(N: int) -> np.ndarray:
    n = np.arange(-N, N + 1)
    c = np.zeros(n.size, dtype=complex)
    nz = n != 0
    c[nz] = ((-1.0) ** n[nz] - 1.0) / (np.pi * n[nz] ** 2)
    c[N] = np.pi / 2
    return c


def _abs_t_eval(theta, N=None):
    return np.abs(_wrap(theta)).astype(complex)


def _square_coeffs(N: int) -> np.ndarray:
    n = np.arange(-N, N + 1)
    c = np.zeros(n.size, dtype=complex)
    odd = (n % 2) != 0
    c[odd] = -2j / (np.pi * n[odd])
    return c


def _square_eval(theta, N=None):
    # value at the jumps t = 0 and t = pi is the jump midpoint 0
    t = _wrap(theta)
    return np.where(t == -np.pi, 0.0, np.sign(t)).astype(complex)


def _poisson_coeffs(N: int) -> np.ndarray:
    return np.ones(2 * N + 1, dtype=complex)


def _poisson_eval(theta, N):
    t = _wrap(theta)
    half = np.sin(t / 2)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.sin((N + 0.5) * t) / half
    return np.where(np.abs(half) < 1e-300, 2 * N + 1.0, out).astype(complex)


def _check_k(k: int, N: int) -> int:
    k = int(k)
    if abs(k) > N:
        raise SpecError(f"harmonic index {k} exceeds degree N={N}")
    return k


def _harmonic_coeffs(N: int, k: int = 1) -> np.ndarray:
    c = np.zeros(2 * N + 1, dtype=complex)
    c[_check_k(k, N) + N] = 1.0
    return c


def _cos_coeffs(N: int, k: int = 1) -> np.ndarray:
    c = np.zeros(2 * N + 1, dtype=complex)
    k = _check_k(k, N)
    c[k + N] += 0.5
    c[-k + N] += 0.5
    return c


def _sin_coeffs(N: int, k: int = 1) -> np.ndarray:
    c = np.zeros(2 * N + 1, dtype=complex)
    k = _check_k(k, N)
    c[k + N] += -0.5j
    c[-k + N] += 0.5j
    return c


def _constant_coeffs(N: int, value: float = 1.0) -> np.ndarray:
    c = np.zeros(2 * N + 1, dtype=complex)
    c[N] = value
    return c


@dataclass(frozen=True)
class Preset:
    name: str
    coefficients: Callable[..., np.ndarray]
    evaluator: Callable[..., np.ndarray]
    real_valued: bool
    description: str


PRESETS: dict[str, Preset] = {
    p.name: p for p in [
        Preset("abs_t", _abs_t_coeffs, _abs_t_eval, True,
               "F(t) = |t| on [-pi, pi]"),
        Preset("square_wave", _square_coeffs, _square_eval, True,
               "sign(t) on (-pi, pi), the derivative of abs_t"),
        Preset("poisson_boundary", _poisson_coeffs, _poisson_eval, True,
               "c_n = 1 for |n| <= N (Dirichlet kernel; extension tends to the Poisson kernel)"),
        Preset("harmonic", _harmonic_coeffs,
               lambda theta, N=None, k=1: np.exp(1j * int(k) * np.asarray(theta, dtype=float)),
               False, "e^{ik t}, parameter k (default 1)"),
        Preset("cos", _cos_coeffs,
               lambda theta, N=None, k=1: np.cos(int(k) * np.asarray(theta, dtype=float)).astype(complex),
               True, "cos(k t), parameter k (default 1)"),
        Preset("sin", _sin_coeffs,
               lambda theta, N=None, k=1: np.sin(int(k) * np.asarray(theta, dtype=float)).astype(complex),
               True, "sin(k t), parameter k (default 1)"),
        Preset("constant", _constant_coeffs,
               lambda theta, N=None, value=1.0: np.full(np.shape(theta), value, dtype=complex),
               True, "constant function, parameter value (default 1)"),
    ]
}

_PARAM_NAME = {"harmonic": "k", "cos": "k", "sin": "k", "constant": "value"}


def _parse_preset_name(name: str, params: Mapping | None) -> tuple[Preset, dict]:
    params = dict(params or {})
    base, _, suffix = name.partition(":")
    if base not in PRESETS:
        raise SpecError(f"unknown preset {base!r}; available: {', '.join(sorted(PRESETS))}")
    if suffix:
        if base not in _PARAM_NAME:
            raise SpecError(f"preset {base!r} takes no parameter")
        key = _PARAM_NAME[base]
        try:
            params[key] = float(suffix) if key == "value" else int(suffix)
        except ValueError as exc:
            raise SpecError(f"bad parameter {suffix!r} for preset {base!r}") from exc
    return PRESETS[base], params


def preset_series(name: str, N: int, **params) -> FourierSeries:
    """Exact coefficients of a named preset up to degree ``N``.

    ``name`` may carry its parameter inline, e.g. ``"cos:3"``.
    """
    if N is None or N < 0:
        raise SpecError("preset degree N must be given explicitly and be nonnegative")
    preset, params = _parse_preset_name(name, params)
    real = preset.real_valued and not (preset.name == "constant"
                                       and complex(params.get("value", 1.0)).imag != 0)
    return FourierSeries(preset.coefficients(N, **params), real_valued=real)


def preset_evaluator(name: str, N: int | None = None, **params) -> Callable[[np.ndarray], np.ndarray]:
    """Closed-form evaluator on the circle (of the untruncated function, except
    ``poisson_boundary`` whose boundary function is the degree-N Dirichlet kernel)."""
    preset, params = _parse_preset_name(name, params)
    if preset.name == "poisson_boundary" and N is None:
        raise SpecError("poisson_boundary evaluator needs N")

    def evaluate(theta):
        return np.asarray(preset.evaluator(theta, N, **params), dtype=complex)

    return evaluate


# ---------------------------------------------------------------------------
# user-facing spec

@dataclass(frozen=True)
class BoundarySpec:
    """Boundary data as supplied by a user: a preset, sparse coefficients, or samples."""

    kind: str
    name: str | None = None
    N: int | None = None
    params: dict = field(default_factory=dict)
    coefficients: tuple | None = None
    samples: np.ndarray | None = None

    def __post_init__(self):
        if self.kind not in ("preset", "coefficients", "samples"):
            raise SpecError(f"kind must be preset, coefficients or samples, not {self.kind!r}")
        if self.N is not None and (not isinstance(self.N, (int, np.integer)) or self.N < 0):
            raise SpecError(f"N must be a nonnegative integer, got {self.N!r}")
        if self.kind == "preset":
            if not self.name:
                raise SpecError("preset spec needs a name")
            _parse_preset_name(self.name, self.params)
        elif self.kind == "coefficients":
            if self.coefficients is None:
                raise SpecError("coefficients spec needs a coefficient list")
        else:
            if self.samples is None:
                raise SpecError("samples spec needs a sample list")
            m = len(self.samples)
            if m < 4 or not is_power_of_two(m):
                raise SpecError(f"sample count must be a power of two >= 4, got {m}")

    @classmethod
    def from_dict(cls, data: Mapping) -> "BoundarySpec":
        if not isinstance(data, Mapping):
            raise SpecError("boundary spec must be a JSON object")
        unknown = set(data) - {"kind", "name", "N", "params", "coefficients", "samples"}
        if unknown:
            raise SpecError(f"unknown keys in boundary spec: {sorted(unknown)}")
        kind = data.get("kind")
        coeffs = None
        if data.get("coefficients") is not None:
            try:
                coeffs = tuple((int(n), complex(float(re), float(im)))
                               for n, re, im in data["coefficients"])
            except (TypeError, ValueError) as exc:
                raise SpecError("coefficients must be a list of [n, re, im] triples") from exc
        samples = None
        if data.get("samples") is not None:
            try:
                samples = np.array([complex(float(re), float(im)) for re, im in data["samples"]])
            except (TypeError, ValueError) as exc:
                raise SpecError("samples must be a list of [re, im] pairs") from exc
        return cls(kind=kind, name=data.get("name"), N=data.get("N"),
                   params=dict(data.get("params") or {}), coefficients=coeffs, samples=samples)

    @classmethod
    def from_json(cls, text: str, source: str = "<spec>") -> "BoundarySpec":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SpecError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.name is not None:
            out["name"] = self.name
        if self.N is not None:
            out["N"] = int(self.N)
        if self.params:
            out["params"] = dict(self.params)
        if self.coefficients is not None:
            out["coefficients"] = [[n, c.real, c.imag] for n, c in self.coefficients]
        if self.samples is not None:
            out["samples"] = [[s.real, s.imag] for s in self.samples]
        return out

    def to_series(self, N: int | None = None) -> FourierSeries:
        """Resolve to coefficients; an explicit ``N`` argument overrides the spec's."""
        N = self.N if N is None else N
        if self.kind == "preset":
            if N is None:
                raise SpecError("preset spec needs an explicit degree N")
            return preset_series(self.name, N, **self.params)
        if self.kind == "coefficients":
            terms: dict[int, complex] = {}
            for n, c in self.coefficients:
                terms[n] = terms.get(n, 0j) + c
            return FourierSeries.from_dict(terms, N)
        if N is None:
            raise SpecError("samples spec needs an explicit degree N")
        try:
            return series_from_samples(self.samples, N)
        except ValueError as exc:
            raise SpecError(str(exc)) from exc

    def evaluator(self, N: int | None = None) -> Callable[[np.ndarray], np.ndarray]:
        """Circle evaluator: closed form for presets, the series otherwise."""
        N = self.N if N is None else N
        if self.kind == "preset":
            return preset_evaluator(self.name, N, **self.params)
        series = self.to_series(N)
        return lambda theta: np.asarray(evaluate_on_circle(series, theta))
