"""Spectral computations for harmonic functions on the unit disc.

Boundary data live on the circle as truncated Fourier series; every disc
operator has a spectral path and an independent quadrature oracle.
"""

from disc_harmonics.boundary import (
    BoundarySpec,
    FourierSeries,
    boundary_derivative,
    evaluate_on_circle,
    preset_series,
    series_from_samples,
)
from disc_harmonics.disc_ops import (
    AnalyticSeries,
    DiscPoint,
    conjugate_function,
    hilbert_transform,
    poisson_extend,
    riesz_projection,
    wirtinger_dz,
    wirtinger_dzbar,
)
from disc_harmonics.exceptions import DomainError, SpecError

__version__ = "0.1.0"

__all__ = [
    "AnalyticSeries",
    "BoundarySpec",
    "DiscPoint",
    "DomainError",
    "FourierSeries",
    "SpecError",
    "boundary_derivative",
    "conjugate_function",
    "evaluate_on_circle",
    "hilbert_transform",
    "poisson_extend",
    "preset_series",
    "riesz_projection",
    "series_from_samples",
    "wirtinger_dz",
    "wirtinger_dzbar",
]
