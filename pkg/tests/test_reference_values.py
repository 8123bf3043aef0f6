"""Reference values for individual operations (closed forms and oracle cross-checks)."""

import math

import numpy as np
import pytest
from scipy.integrate import quad

from disc_harmonics import (
    DiscPoint,
    FourierSeries,
    boundary_derivative,
    conjugate_function,
    evaluate_on_circle,
    hilbert_transform,
    poisson_extend,
    preset_series,
    riesz_projection,
    series_from_samples,
    wirtinger_dz,
    wirtinger_dzbar,
)
from disc_harmonics.boundary import preset_evaluator, uniform_grid
from disc_harmonics.disc_ops import (
    cauchy_integral_oracle,
    conjugate_extension_quadrature,
    conjugate_identity_check,
    conjugate_poisson_kernel,
    polar_derivatives,
    poisson_quadrature_oracle,
    pv_hilbert_oracle,
)
from disc_harmonics.norms import circle_lp_norm, hardy_norm, integral_mean, kernel_moment
from disc_harmonics.disc_ops import dz_series

SQ = preset_evaluator("square_wave")


def z_of(r, theta):
    return DiscPoint(r, theta).z


def test_samples_to_coefficients():
    c = series_from_samples(np.ones(8), 1)
    assert np.allclose(c.coeffs, [0, 1, 0], atol=1e-15)
    c = series_from_samples(np.exp(1j * uniform_grid(8)), 2)
    assert np.allclose(c.coeffs, [0, 0, 0, 1, 0], atol=1e-15)


def test_square_wave_samples_against_direct_integration():
    t = uniform_grid(4096)
    c = series_from_samples(SQ(t), 63)
    dev = 0.0
    for n in range(1, 64):
        exact = complex(0.0, -quad(lambda s: np.sign(s) * math.sin(n * s), -math.pi, math.pi)[0] / (2 * math.pi))
        dev = max(dev, abs(c.coef(n) - exact))
    # the sampled square wave is itself only a discretisation of the jump
    assert dev < 1e-3


def test_boundary_derivative_small_cases():
    assert boundary_derivative(FourierSeries.from_dict({1: 1.0})).coef(1) == 1j
    assert np.all(boundary_derivative(preset_series("constant", 3)).coeffs == 0)


def test_circle_evaluation_small_cases():
    assert evaluate_on_circle(FourierSeries.from_dict({0: 3.0}), 1.2) == 3
    assert abs(evaluate_on_circle(FourierSeries.from_dict({1: 1.0}), math.pi / 2) - 1j) < 1e-15
    assert abs(evaluate_on_circle(preset_series("abs_t", 2001), 1.0) - 1.0) < 1e-3


def test_poisson_extension_cases():
    assert poisson_extend(FourierSeries.from_dict({1: 1.0}), z_of(0.5, 0)) == 0.5
    z = z_of(0.7, 1.0)
    spectral = poisson_extend(preset_series("square_wave", 4095), z)
    assert abs(spectral - poisson_quadrature_oracle(SQ, z, 1 << 16).value) < 1e-6
    assert abs(poisson_quadrature_oracle(lambda t: np.ones_like(t, dtype=complex), 0.3).value - 1) < 1e-14
    assert abs(poisson_quadrature_oracle(np.cos, 0.5, 1024).value - 0.5) < 1e-10


def test_riesz_projection_cases():
    assert np.all(riesz_projection(FourierSeries.from_dict({-3: 1.0})).coeffs == 0)
    P = riesz_projection(preset_series("poisson_boundary", 5))
    assert np.all(P.coeffs == 1)


def test_cauchy_integral_cases():
    ones = lambda t: np.ones_like(t, dtype=complex)
    assert abs(cauchy_integral_oracle(ones, z_of(0.3, 0.7)).value - 1) < 1e-14
    assert abs(cauchy_integral_oracle(lambda t: np.exp(1j * t), 0.4).value - 0.4) < 1e-14
    z = z_of(0.6, 2.0)
    spectral = riesz_projection(preset_series("square_wave", 8191)).evaluate(z)
    assert abs(spectral - cauchy_integral_oracle(SQ, z, 1 << 16).value) < 1e-6


def test_conjugate_function_cases():
    C = conjugate_function(preset_series("cos", 1))
    assert np.allclose(C.coeffs, preset_series("sin", 1).coeffs, atol=1e-16)
    assert np.all(conjugate_function(preset_series("constant", 2)).coeffs == 0)
    assert abs(hilbert_transform(preset_series("square_wave", 8191)).evaluate(math.pi / 2)) < 1e-3


def test_hilbert_cases():
    H = hilbert_transform(preset_series("sin", 1))
    assert np.allclose(H.coeffs, -preset_series("cos", 1).coeffs, atol=1e-16)
    theta = 2 * math.atan(math.exp(math.pi / 2))
    assert abs(hilbert_transform(preset_series("square_wave", 16383)).evaluate(theta) - 1) < 2e-2
    assert abs(pv_hilbert_oracle(np.cos, 0.8, 2048).value - math.sin(0.8)) < 1e-8
    assert abs(pv_hilbert_oracle(lambda t: np.ones_like(t), 0.3).value) < 1e-12
    assert abs(pv_hilbert_oracle(SQ, 1.0, 1 << 16).value - 2 / math.pi * math.log(math.tan(0.5))) < 1e-3


def test_conjugate_kernel_cases():
    assert conjugate_poisson_kernel(0.5) == 0
    assert conjugate_poisson_kernel(0.0) == 0
    assert abs(conjugate_poisson_kernel(0.5j) - 0.8) < 1e-15
    assert abs(conjugate_extension_quadrature(lambda t: np.ones_like(t), 0.4).value) < 1e-14
    z = z_of(0.5, 0.9)
    assert abs(conjugate_extension_quadrature(np.cos, z, 1024).value - 0.5 * math.sin(0.9)) < 1e-10
    z = z_of(0.7, 1.0)
    spectral = poisson_extend(conjugate_function(preset_series("square_wave", 8191)), z)
    assert abs(conjugate_extension_quadrature(SQ, z, 1 << 16).value - spectral) < 1e-5


def test_wirtinger_cases():
    z = z_of(0.4, 1.1)
    assert abs(wirtinger_dz(FourierSeries.from_dict({1: 1.0}), z) - 1) < 1e-15
    assert wirtinger_dz(FourierSeries.from_dict({-2: 1.0}), z) == 0
    assert abs(wirtinger_dzbar(FourierSeries.from_dict({-1: 1.0}), z) - 1) < 1e-15
    assert wirtinger_dzbar(FourierSeries.from_dict({2: 1.0}), z) == 0
    F = preset_series("abs_t", 16383)
    closed = 2 / (0.9 * math.pi) * math.atanh(0.9)
    assert abs(abs(wirtinger_dz(F, 0.9)) - closed) < 1e-6
    z = z_of(0.5, 0.3)
    assert abs(wirtinger_dzbar(F, z) - np.conj(wirtinger_dz(F, z))) < 1e-8


def test_polar_cases():
    f_theta, rf_r = polar_derivatives(FourierSeries.from_dict({1: 1.0}), z_of(0.5, math.pi / 2))
    assert abs(f_theta + 0.5) < 1e-15 and abs(rf_r - 0.5j) < 1e-15
    assert polar_derivatives(preset_series("constant", 2), 0.3) == (0, 0)
    z = z_of(0.8, 1.3)
    f_theta, _ = polar_derivatives(preset_series("abs_t", 4095), z)
    assert abs(f_theta - poisson_quadrature_oracle(SQ, z, 1 << 16).value) < 1e-6


def test_conjugate_identity_cases():
    assert conjugate_identity_check(preset_series("sin", 1), z_of(0.5, 1.0)) <= 1e-12
    assert conjugate_identity_check(FourierSeries.zeros(2), 0.3) == 0
    assert conjugate_identity_check(preset_series("square_wave", 4095), z_of(0.9, 0.2)) <= 1e-8


@pytest.mark.parametrize("p", [1, 2, 3])
def test_norm_cases(p):
    assert circle_lp_norm(preset_series("constant:-2", 1), p).value == pytest.approx(2, abs=1e-14)
    # the truncated series overshoots near the jumps (Gibbs); the closed form is exact
    assert abs(circle_lp_norm(SQ, p, M=4096).value - 1) < 1e-3


def test_integral_mean_cases():
    assert integral_mean(FourierSeries.from_dict({1: 1.0}), 0.6, 2).value == pytest.approx(0.6, abs=1e-15)
    f = preset_series("square_wave", 4095)
    a = integral_mean(f, 0.9, 3, M=1 << 14).value
    b = integral_mean(f, 0.9, 3, M=1 << 15).value
    assert abs(a - b) < 1e-6


def test_hardy_grid_sup_of_z():
    h = hardy_norm(FourierSeries.from_dict({1: 1.0}), 2)
    assert h.value == pytest.approx(1 - 2.0 ** -12, abs=1e-15)


def test_hardy_sup_of_fz_grows_like_arctanh():
    fz = dz_series(preset_series("abs_t", 8191))
    r = 0.999
    assert integral_mean(fz, r, math.inf).value >= 0.95 * 2 / (math.pi * r) * math.atanh(r)


def test_kernel_moment_cases():
    assert kernel_moment(2.0, 0.0) == pytest.approx(1.0, abs=1e-15)
    assert kernel_moment(1.0, 0.5) <= 4 / 3 * (1 + 1e-12)
