import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.special import ellipk, hyp2f1, zeta

from disc_harmonics import AnalyticSeries, DomainError, FourierSeries, preset_series
from disc_harmonics.disc_ops import dz_series
from disc_harmonics.norms import (
    Exponent,
    bergman_norm,
    circle_lp_norm,
    default_panels,
    hardy_norm,
    integral_mean,
    kernel_moment,
    kernel_moment_bound,
    log_kernel_mean,
)
from test_boundary import series


def test_exponent_domain():
    assert Exponent(2).q == 2
    assert Exponent(1).q == math.inf and Exponent(math.inf).q == 1
    for bad in (0.5, -1, float("nan")):
        with pytest.raises(DomainError):
            Exponent(bad)


@pytest.mark.parametrize("p", [1, 1.5, 2, 3, math.inf])
def test_unimodular_functions_have_norm_one(p):
    assert circle_lp_norm(FourierSeries.from_dict({3: 1.0}), p).value == pytest.approx(1.0, abs=1e-14)
    assert circle_lp_norm(preset_series("constant:2", 0), p).value == pytest.approx(2.0, abs=1e-14)


def test_circle_norm_of_cosine():
    # ||cos||_1 = 2/pi, ||cos||_2 = 1/sqrt 2
    F = preset_series("cos", 1)
    # |cos| has kinks, so the trapezoid rule is only second order
    coarse = circle_lp_norm(F, 1)
    assert abs(coarse.value - 2 / math.pi) <= 4 * coarse.error
    assert circle_lp_norm(F, 1, M=1 << 16).value == pytest.approx(2 / math.pi, abs=1e-8)
    assert circle_lp_norm(F, 2).value == pytest.approx(1 / math.sqrt(2), abs=1e-15)
    callable_norm = circle_lp_norm(lambda t: np.cos(t), 1, M=4096)
    assert callable_norm.value == pytest.approx(2 / math.pi, abs=1e-6)


@given(series(max_degree=10), st.floats(0.0, 0.99))
def test_integral_mean_parseval(F, r):
    m = integral_mean(F, r, 2)
    assert abs(m.value - m.details["parseval"]) <= 1e-12 * (1 + m.value)


def test_aliasing_refused():
    with pytest.raises(ValueError):
        integral_mean(preset_series("abs_t", 100), 0.5, 2, M=128)
    with pytest.raises(DomainError):
        integral_mean(preset_series("cos", 1), 1.0, 2)


def test_hardy_means_monotone_and_bounded_for_polynomial():
    F = FourierSeries.from_dict({0: 1.0, 4: 2.0, -1: 1.0})
    h = hardy_norm(F, 3)
    assert h.details["monotone"]
    assert h.value <= circle_lp_norm(F, 3).value + 1e-12
    assert h.lower_bound


def test_hardy_of_fz_for_abs_t_p2():
    # sum over odd n of (2/(pi n))^2 = 1/2
    h = hardy_norm(dz_series(preset_series("abs_t", 8191)), 2)
    assert abs(h.value - h.details["parseval"]) < 1e-8
    assert h.value < math.sqrt(0.5)


def test_default_panels():
    assert default_panels(preset_series("abs_t", 8191)) == 1 << 16
    assert default_panels(lambda z: z, 0.999) == 1 << 16
    assert default_panels(lambda z: z, 0.0) == 1024


def test_bergman_norm_of_monomials():
    # ||z^k||_{B^p}^p = 2 / (kp + 2)
    for k, p in [(1, 2), (2, 1), (3, 4)]:
        f = AnalyticSeries(np.eye(k + 1)[k])
        assert bergman_norm(f, p).value == pytest.approx((2 / (k * p + 2)) ** (1 / p), rel=1e-12)


def test_bergman_norm_of_fz_abs_t_closed_form():
    # ||f_z||^2 = sum_{odd n} 4/(pi^2 n^3) = (4/pi^2)(7/8) zeta(3); truncation error ~ 1/N^2
    fz = dz_series(preset_series("abs_t", 8191))
    exact = math.sqrt(4 / math.pi ** 2 * 7 / 8 * zeta(3))
    b = bergman_norm(fz, 2)
    assert not b.divergent
    assert abs(b.value - exact) < 1e-8


def test_bergman_flags_divergence():
    # 1/(1-z)^2 is not in B^2; truncations put their mass on the outer panel
    f = AnalyticSeries(np.arange(1, 4097, dtype=float))
    assert bergman_norm(f, 2).divergent


@pytest.mark.parametrize("a", [0.5, 1.0, 2.0, 3.0])
@pytest.mark.parametrize("r", [0.0, 0.5, 0.9, 0.99])
def test_kernel_moment_hypergeometric(a, r):
    expected = hyp2f1((a + 1) / 2, (a + 1) / 2, 1, r * r)
    z = r * np.exp(0.7j)
    assert kernel_moment(a, z) == pytest.approx(expected, rel=1e-10)
    assert kernel_moment(a, z) <= kernel_moment_bound(a, r) * (1 + 1e-12)


@pytest.mark.parametrize("r", [0.0, 0.5, 0.9, 0.99, 0.999])
def test_log_kernel_mean_elliptic(r):
    assert log_kernel_mean(r) == pytest.approx(2 / math.pi * ellipk(r * r), rel=1e-10)


def test_kernel_bound_sharp_at_a_one():
    for r in (0.3, 0.9, 0.99):
        assert kernel_moment(1.0, r) == pytest.approx(kernel_moment_bound(1.0, r), rel=1e-12)


def test_kernel_moment_domain():
    with pytest.raises(DomainError):
        kernel_moment(0.0, 0.5)
    with pytest.raises(DomainError):
        kernel_moment(1.0, 1.0)
    with pytest.raises(DomainError):
        kernel_moment_bound(1.0, 1.0)
