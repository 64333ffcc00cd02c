"""Quadrature of the expected-loss integrals and the linear law."""

import numpy as np
import pytest

from ammloss import (
    AnalyticParams,
    DomainError,
    RegimeError,
    curve,
    expected_il,
    expected_lvr,
    linear_approx,
    linear_horizon,
)

BASE = AnalyticParams(p0=100.0, x0=100.0, sigma0=0.01)
UNIT = AnalyticParams(p0=1.0, x0=1.0, sigma0=1.0)


def test_expected_values_at_reference_point():
    assert expected_il(BASE, 5000.0) == pytest.approx(0.0012503399466951375, rel=1e-9)
    assert expected_lvr(BASE, 5000.0) == pytest.approx(0.0012501367469568375, rel=1e-9)


def test_expected_values_sit_within_half_percent_of_linear_law():
    lin = linear_approx(BASE, 5000.0)
    assert lin == pytest.approx(0.00125, rel=1e-12)
    assert abs(expected_il(BASE, 5000.0) / lin - 1.0) < 0.005
    assert abs(expected_lvr(BASE, 5000.0) / lin - 1.0) < 0.005


def test_losses_vanish_at_short_horizon():
    assert 0.0 < expected_il(BASE, 1e-6) < 1e-12
    assert 0.0 < expected_lvr(BASE, 1e-6) < 1e-12


def test_linear_approx_values():
    assert linear_approx(BASE, 0.0) == 0.0
    assert linear_approx(BASE, 10000.0) == pytest.approx(
        2.0 * linear_approx(BASE, 5000.0), rel=1e-15
    )
    with pytest.raises(DomainError):
        linear_approx(BASE, -1.0)


def test_time_domain_errors():
    for fn in (expected_il, expected_lvr):
        with pytest.raises(DomainError):
            fn(BASE, 0.0)
        with pytest.raises(DomainError):
            fn(BASE, -10.0)


def test_regime_guard_rejects_long_horizons():
    # the window reaches the zero-price cutoff at t = p0^2/(2 sigma0^2 W^2)
    t_limit = BASE.p0**2 / (2.0 * BASE.sigma0**2 * BASE.gauss_window**2)
    assert expected_il(BASE, 0.98 * t_limit) > 0.0
    for fn in (expected_il, expected_lvr):
        with pytest.raises(RegimeError) as err:
            fn(BASE, 1.02 * t_limit)
        assert "t=" in str(err.value)
        with pytest.raises(RegimeError):
            fn(BASE, 1e6)


def test_quadrature_converges_under_tolerance_halving():
    tighter = AnalyticParams(p0=100.0, x0=100.0, sigma0=0.01,
                             abs_tol=BASE.abs_tol / 2.0, rel_tol=BASE.rel_tol / 2.0)
    for fn in (expected_il, expected_lvr):
        v1 = fn(BASE, 5000.0)
        v2 = fn(tighter, 5000.0)
        assert abs(v1 - v2) < BASE.abs_tol + BASE.rel_tol * abs(v1)


def test_linear_law_holds_through_the_short_time_horizon():
    t_lin = linear_horizon(BASE)
    for t in (0.25 * t_lin, t_lin):
        lin = linear_approx(BASE, t)
        e_il = expected_il(BASE, t)
        e_lvr = expected_lvr(BASE, t)
        assert abs(e_il / lin - 1.0) < 0.01
        assert abs(e_lvr / lin - 1.0) < 0.01
        assert abs(e_lvr - e_il) / e_il < 0.01


def test_deviation_from_linear_grows_past_the_horizon():
    t_lin = linear_horizon(BASE)
    near = abs(expected_il(BASE, t_lin) / linear_approx(BASE, t_lin) - 1.0)
    far = abs(expected_il(BASE, 3.0 * t_lin) / linear_approx(BASE, 3.0 * t_lin) - 1.0)
    assert near < 0.01 < far


def test_curve_linear_kind_is_exactly_linear():
    c = curve(BASE, "linear_approx", t_max=5000.0, points=6)
    assert c.kind == "linear_approx"
    assert c.values[0] == 0.0
    for t, v in zip(c.times, c.values):
        assert v == pytest.approx(linear_approx(BASE, float(t)), rel=1e-15)
    assert c.values[-1] == pytest.approx(0.00125, rel=1e-12)


def test_curve_il_shape_at_unit_parameters():
    # inside the valid regime the curve hugs the t/4 line from above,
    # never more than a few percent high and monotone throughout
    c = curve(UNIT, "il", t_max=0.0075, points=9)
    assert c.values[0] == 0.0
    assert np.all(np.diff(c.values) > 0.0)
    ratios = c.values[1:] / (c.times[1:] / 4.0)
    assert np.all(ratios >= 1.0)
    assert np.all(ratios < 1.05)
    assert ratios[0] == pytest.approx(1.0, abs=0.02)


def test_curve_il_and_lvr_agree_in_regime():
    t_lin = linear_horizon(UNIT)
    c_il = curve(UNIT, "il", t_max=t_lin, points=5)
    c_lvr = curve(UNIT, "lvr", t_max=t_lin, points=5)
    gap = np.abs(c_lvr.values[1:] - c_il.values[1:]) / c_il.values[1:]
    assert np.all(gap < 0.01)


def test_curve_errors():
    with pytest.raises(ValueError):
        curve(BASE, "hyperbolic", 10.0, 5)
    with pytest.raises(DomainError):
        curve(BASE, "il", -1.0, 5)
    with pytest.raises(ValueError):
        curve(BASE, "il", 10.0, 1)
    with pytest.raises(RegimeError):
        curve(UNIT, "il", t_max=0.05, points=4)


def test_params_validation():
    with pytest.raises(DomainError):
        AnalyticParams(p0=-1.0, x0=1.0, sigma0=1.0)
    with pytest.raises(ValueError):
        AnalyticParams(p0=1.0, x0=1.0, sigma0=1.0, abs_tol=0.0)
    with pytest.raises(ValueError):
        AnalyticParams(p0=1.0, x0=1.0, sigma0=1.0, gauss_window=4.0)
