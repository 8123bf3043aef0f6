import json
import math

import numpy as np
import pytest

from disc_harmonics import DomainError
from disc_harmonics.verify import (
    CHECK_NAMES,
    SuiteConfig,
    TrialGenerator,
    VerificationReport,
    _suite_jobs,
    all_passed,
    check_bergman_membership,
    check_holder_continuity,
    check_identity_2izfz,
    check_jensen_step,
    check_kernel_moment,
    check_main_theorem_lp,
    check_oracle_agreement,
    check_pointwise_bound,
    check_polar_lemma,
    check_riesz_inequality,
    disc_points,
    pointwise_witness,
    run_all,
)
from disc_harmonics.disc_ops import wirtinger_dz
from disc_harmonics.boundary import boundary_derivative
from disc_harmonics.norms import circle_lp_norm, pointwise_constant


def test_trial_generator_is_seeded():
    a = TrialGenerator(5).series(3)
    b = TrialGenerator(5).series(3)
    assert all(np.array_equal(x.coeffs, y.coeffs) for x, y in zip(a, b))
    real = TrialGenerator(5, real_valued=True, zero_mean=True).series(2)
    assert all(F.real_valued and F.mean == 0 for F in real)


def test_disc_points_include_centre_and_edge():
    z = disc_points(0, 20, rmax=0.99)
    assert z[0] == 0 and abs(abs(z[1]) - 0.99) < 1e-15
    assert np.all(np.abs(z) <= 0.99 + 1e-15)


@pytest.mark.parametrize("check,kwargs", [
    (check_riesz_inequality, {"p": 3.0, "trials": 20}),
    (check_riesz_inequality, {"p": 2.0, "trials": 20}),
    (check_main_theorem_lp, {"p": 1.5, "trials": 10}),
    (check_main_theorem_lp, {"p": 2.0, "trials": 20}),
    (check_pointwise_bound, {"p": 3.0, "trials": 5}),
    (check_jensen_step, {"p": 2.0, "trials": 3}),
    (check_kernel_moment, {}),
])
def test_checks_pass_and_halved_constant_fails(check, kwargs):
    assert check(**kwargs).passed
    mutated = check(**kwargs, constant_scale=0.5)
    assert not mutated.passed and mutated.margin < 0


def test_identity_and_polar_checks():
    rep = check_identity_2izfz(trials=10, seed=3)
    assert rep.passed and rep.observed <= 1e-9
    rep = check_polar_lemma(trials=10, seed=3)
    assert rep.passed and rep.params["coefficient_deviation"] <= 1e-10


def test_pointwise_witness_nearly_attains_bound():
    for p in (1.5, 2.0, 3.0):
        F = pointwise_witness(p, 0.9)
        ratio = abs(wirtinger_dz(F, 0.9)) / (circle_lp_norm(boundary_derivative(F), p).value
                                            * (1 - 0.81) ** (-1 / p) * pointwise_constant(p))
        assert 0.85 < ratio <= 1 + 1e-6
        if p == 2.0:
            assert ratio == pytest.approx(1.0, abs=1e-6)


def test_endpoint_exponents_refused():
    for p in (1.0, math.inf):
        with pytest.raises(DomainError, match="endpoint"):
            check_riesz_inequality(p)
        with pytest.raises(DomainError):
            check_pointwise_bound(p)


def test_vacuous_reports_are_flagged():
    rep = check_riesz_inequality(2.0, trials=0)
    assert rep.passed and rep.vacuous


def test_holder_regression():
    rep = check_holder_continuity(2.0, pairs=2000, seed=42, trials=2)
    assert rep.passed
    # pinned from the first run
    assert rep.params["maxima"]["abs_t"][0] == pytest.approx(1.36863576104045, rel=1e-9)
    assert rep.params["maxima"]["trial_0"][0] == pytest.approx(26.42630818877332, rel=1e-9)


def test_report_json_round_trip():
    rep = check_kernel_moment()
    data = json.loads(rep.to_json())
    assert set(data) == {"check", "params", "observed", "bound", "margin", "pass", "runtime_ms", "seed"}
    again = VerificationReport.from_dict(data)
    assert again.to_json() == rep.to_json()


def test_margin_sign_convention():
    rep = check_riesz_inequality(3.0, trials=10)
    assert rep.margin == pytest.approx((rep.bound - rep.observed) / rep.bound)
    assert rep.margin > 0
    # the kernel bound is attained at a = 1, so the raw margin sits at rounding level
    assert abs(check_kernel_moment().margin) < 1e-12


def test_unknown_check_lists_available():
    with pytest.raises(KeyError, match="riesz"):
        _suite_jobs(SuiteConfig(), "nope")


def test_every_check_name_has_a_job():
    names = {name for name, _ in _suite_jobs(SuiteConfig())}
    assert names == set(CHECK_NAMES)


def test_run_all_subset_deterministic():
    cfg = SuiteConfig(seed=7, trials=3, record_runtime=False)
    a = [r.to_json() for r in run_all(cfg, "riesz")]
    b = [r.to_json() for r in run_all(cfg, "riesz")]
    assert a == b and len(a) == len(cfg.riesz_exponents)
    assert all_passed(run_all(cfg, "riesz"))


def test_crashing_check_becomes_failed_report(monkeypatch):
    import disc_harmonics.verify as v

    def boom(*args, **kwargs):
        raise RuntimeError("boom")

    monkeypatch.setattr(v, "check_kernel_moment", boom)
    reps = v.run_all(SuiteConfig(), "kernel_moment")
    assert len(reps) == 1 and not reps[0].passed and "boom" in reps[0].params["error"]


@pytest.mark.slow
def test_bergman_membership():
    rep = check_bergman_membership()
    assert rep.passed and rep.observed <= 1e-4


@pytest.mark.slow
def test_oracle_agreement_small():
    assert check_oracle_agreement(trials=5, seed=1, points=6).passed
