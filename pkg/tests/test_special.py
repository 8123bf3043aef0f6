import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from disc_harmonics.norms import pointwise_constant, riesz_constant
from disc_harmonics.special import gamma, log_gamma
from disc_harmonics import DomainError


@given(st.floats(1e-3, 50.0))
def test_gamma_matches_mpmath(x):
    assert abs(gamma(x) / float(mpmath.gamma(x)) - 1) < 1e-12


@given(st.floats(-20.0, 0.0).filter(lambda x: abs(x - round(x)) > 1e-3))
def test_gamma_reflection_for_negative_arguments(x):
    assert abs(gamma(x) / float(mpmath.gamma(x)) - 1) < 1e-11


@given(st.floats(1e-3, 500.0))
def test_log_gamma_matches_mpmath(x):
    assert abs(log_gamma(x) - float(mpmath.loggamma(x))) < 1e-12 * max(1.0, abs(log_gamma(x)))


def test_gamma_exact_values():
    assert gamma(1.0) == pytest.approx(1.0, rel=1e-15)
    assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    assert gamma(11.0) == pytest.approx(3628800.0, rel=1e-14)


# (Gamma(q-1)/Gamma(q/2)^2)^(1/q) at 30 digits (mpmath)
PINNED_CP = {1.5: 1.0838521402785780175, 2.0: 1.0, 3.0: 1.1168758411298813375,
             4.0: 1.3288847710516858765}


@pytest.mark.parametrize("p", sorted(PINNED_CP))
def test_pointwise_constants_pinned(p):
    assert abs(pointwise_constant(p) - PINNED_CP[p]) < 1e-12


def test_pointwise_constant_is_one_at_two():
    assert abs(pointwise_constant(2.0) - 1.0) < 1e-15


def test_riesz_constant():
    assert riesz_constant(2) == pytest.approx(1.0, abs=1e-15)
    assert riesz_constant(4) == pytest.approx(math.sqrt(2), rel=1e-15)
    assert riesz_constant(4) == pytest.approx(riesz_constant(4 / 3), rel=1e-14)


@pytest.mark.parametrize("p", [1.0, math.inf])
def test_constants_undefined_at_endpoints(p):
    with pytest.raises(DomainError):
        riesz_constant(p)
    with pytest.raises(DomainError):
        pointwise_constant(p)
