"""Expected losses by quadrature against the short-time Gaussian law.

At horizon t the additive walk's price is close to Gaussian with mean
p0 and variance sigma0^2 * t.  Averaging the pathwise loss functions against
that law gives two one-parameter curves:

    expected_il(t)   E[il(p_t)], a single Gaussian average
    expected_lvr(t)  integral over t' <= t of E[lvr_rate(p_t')]

and both collapse, to leading order in sigma0^2 * t / p0^2, onto the
same linear law

    linear_approx(t) = x0 * sigma0^2 * t / (4 * p0^2)

The Gaussian average is taken over u in [-W, W] standard deviations.
Whenever the zero-price cutoff -p0 / sqrt(2 sigma0^2 t) falls inside
that window the Gaussian assigns real mass to negative prices and the
computation refuses to proceed (RegimeError) rather than return a
number from the wrong regime.
"""

from dataclasses import dataclass
from math import exp, pi, sqrt

import numpy as np
from scipy.integrate import quad

from .cfmm import Anchor, il
from .errors import DomainError, RegimeError

# t below LINEAR_REGIME_COEFF * (p0 / sigma0)^2 keeps both expected
# curves within 1% of the linear law (frozen from a numeric sweep; the
# deviation grows like 5.5 * sigma0^2 t / p0^2 for il and 2.2 for lvr)
LINEAR_REGIME_COEFF = 0.0015

CURVE_KINDS = ("il", "lvr", "linear_approx")

_QUAD_LIMIT = 200


@dataclass(frozen=True)
class AnalyticParams:
    """Anchor plus quadrature controls.

    gauss_window is the half-width W of the standardised integration
    window; 8 standard deviations leave a truncation error around
    1e-28, far below the default tolerances.
    """

    p0: float
    x0: float
    sigma0: float
    abs_tol: float = 1e-12
    rel_tol: float = 1e-9
    gauss_window: float = 8.0

    def __post_init__(self):
        if self.p0 <= 0 or self.x0 <= 0 or self.sigma0 <= 0:
            raise DomainError("p0, x0 and sigma0 must be positive")
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.gauss_window < 6.0:
            raise ValueError("gauss_window below 6 truncates visible mass")


@dataclass(frozen=True)
class AnalyticCurve:
    kind: str
    times: np.ndarray
    values: np.ndarray


def linear_horizon(params):
    """Largest t for which the linear law is trusted to about 1%."""
    return LINEAR_REGIME_COEFF * (params.p0 / params.sigma0) ** 2


def _gauss_scale(params, t):
    # the price law at horizon t is N(p0, sigma0^2 t); writing it as
    # p = p0 + a * u with weight exp(-u^2) needs a = sqrt(2 sigma0^2 t)
    a = sqrt(2.0 * params.sigma0 * params.sigma0 * t)
    if params.p0 <= a * params.gauss_window:
        raise RegimeError(
            f"zero-price cutoff at {params.p0 / a:.3f} standard units falls inside "
            f"the [-{params.gauss_window}, {params.gauss_window}] window at t={t}; "
            "the Gaussian law no longer describes a positive price"
        )
    return a


def expected_il(params, t):
    """Gaussian-averaged impermanent loss at horizon t.

    (1 / sqrt(pi)) * integral of il(p0 + a u) exp(-u^2) du over the
    window, with a = sqrt(2 sigma0^2 t).
    """
    if t <= 0:
        raise DomainError(f"t must be positive, got {t}")
    a = _gauss_scale(params, t)
    W = params.gauss_window
    anchor = Anchor(p0=params.p0, x0=params.x0)
    # the guard keeps the cutoff outside the window, so lo is -W; the
    # small offset only matters if the guard is ever relaxed
    lo = max(-W, -params.p0 / a + 1e-12 * params.p0 / a)

    def f(u):
        return il(anchor, params.p0 + a * u) * exp(-u * u)

    val, _ = quad(
        f,
        lo,
        W,
        epsabs=params.abs_tol * sqrt(pi),
        epsrel=params.rel_tol,
        limit=_QUAD_LIMIT,
    )
    return val / sqrt(pi)


def expected_lvr(params, t):
    """Accumulated expected arbitrage loss up to horizon t.

    Integrates the Gaussian average of lvr_rate over intermediate
    times t' in (0, t]:

        (x0 sigma0^2 sqrt(p0) / (4 sqrt(pi)))
            * int_0^t dt' int du (p0 + sqrt(2 sigma0^2 t') u)^(-5/2) e^(-u^2)

    evaluated with the substitution s = sqrt(t') so the outer integrand
    is smooth at the origin.  The regime guard is applied at the widest
    law, t' = t.
    """
    if t <= 0:
        raise DomainError(f"t must be positive, got {t}")
    _gauss_scale(params, t)
    W = params.gauss_window
    p0 = params.p0
    pref = params.x0 * params.sigma0**2 * sqrt(p0) / (4.0 * sqrt(pi))
    root2_sigma = sqrt(2.0) * params.sigma0

    def inner(s):
        b = root2_sigma * s

        def g(u):
            return (p0 + b * u) ** -2.5 * exp(-u * u)

        v, _ = quad(g, -W, W, epsabs=0.0, epsrel=params.rel_tol / 10.0, limit=_QUAD_LIMIT)
        return v

    def outer(s):
        return 2.0 * s * inner(s)

    val, _ = quad(
        outer,
        0.0,
        sqrt(t),
        epsabs=params.abs_tol / pref,
        epsrel=params.rel_tol,
        limit=_QUAD_LIMIT,
    )
    return pref * val


def linear_approx(params, t):
    """Leading-order law shared by both losses: x0 sigma0^2 t / (4 p0^2)."""
    if t < 0:
        raise DomainError(f"t must be non-negative, got {t}")
    return params.x0 * params.sigma0**2 * t / (4.0 * params.p0**2)


def curve(params, kind, t_max, points):
    """Sample one loss curve on an even grid over [0, t_max].

    kind is il, lvr or linear_approx.  The t = 0 point is the exact
    limit 0 for every kind.  A RegimeError from any grid point
    propagates, since it means t_max reaches past the trusted regime.
    """
    if kind not in CURVE_KINDS:
        raise ValueError(f"kind must be one of {CURVE_KINDS}, got {kind!r}")
    if t_max <= 0:
        raise DomainError(f"t_max must be positive, got {t_max}")
    if points < 2:
        raise ValueError(f"points must be at least 2, got {points}")
    times = np.linspace(0.0, t_max, points)
    fn = {
        "il": expected_il,
        "lvr": expected_lvr,
        "linear_approx": linear_approx,
    }[kind]
    values = np.empty(points, dtype=np.float64)
    values[0] = 0.0
    for i in range(1, points):
        values[i] = fn(params, float(times[i]))
    return AnalyticCurve(kind=kind, times=times, values=values)
