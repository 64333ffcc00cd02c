"""Additive price walks and their short-time Gaussian densities.

Prices move by p_{i+1} = p_i + sigma0 * xi_i with unit time steps.  Two
step distributions are supported:

    binary    xi = +1 or -1 with equal probability
    gaussian  xi standard normal

Both have per-step variance sigma0^2, so after n steps the price sits
near p0 with variance sigma0^2 * n and the binary walk converges to the
same Gaussian profile as the gaussian one.
"""

import warnings
from dataclasses import dataclass
from math import sqrt

import numpy as np

from .errors import DomainError, PathCrossedZeroError

KINDS = ("binary", "gaussian")


@dataclass(frozen=True)
class WalkParams:
    """Parameters of one additive walk.

    steps counts price moves, so a generated path holds steps + 1
    prices.  steps = 0 is allowed and yields the single-point path
    [p0].  A warning is issued when sigma0 * sqrt(steps) >= p0 since
    typical paths then wander within reach of zero.
    """

    p0: float
    sigma0: float
    steps: int
    kind: str = "binary"

    def __post_init__(self):
        if self.p0 <= 0:
            raise DomainError(f"p0 must be positive, got {self.p0}")
        if self.sigma0 <= 0:
            raise DomainError(f"sigma0 must be positive, got {self.sigma0}")
        if self.steps < 0 or self.steps != int(self.steps):
            raise ValueError(f"steps must be a non-negative integer, got {self.steps}")
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.sigma0 * sqrt(self.steps) >= self.p0:
            warnings.warn(
                "sigma0 * sqrt(steps) >= p0: typical paths reach the zero"
                " bound and may be rejected",
                RuntimeWarning,
                stacklevel=2,
            )


@dataclass(frozen=True)
class PricePath:
    """One realized walk.

    prices has length steps + 1 with prices[0] = p0.  increments holds
    the exact per-step moves sigma0 * xi_i; the price array is the
    rounded running sum of those increments, so downstream per-move
    arithmetic should consume increments rather than price differences.
    """

    prices: np.ndarray
    increments: np.ndarray
    seed: int


def generate_path(params, seed):
    """Generate one path from an integer seed, rejecting zero crossings.

    The same (params, seed) pair always produces the same path.  If any
    price falls to zero or below the path is rejected with the first
    offending step index.
    """
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    n = params.steps
    if params.kind == "binary":
        xi = rng.integers(0, 2, size=n, dtype=np.int64) * 2 - 1
        increments = params.sigma0 * xi.astype(np.float64)
        # materialize prices from the integer lattice position so no
        # float error accumulates along the path
        lattice = np.cumsum(xi)
        tail = params.p0 + params.sigma0 * lattice.astype(np.float64)
    else:
        increments = params.sigma0 * rng.standard_normal(n)
        tail = params.p0 + np.cumsum(increments)
    prices = np.empty(n + 1, dtype=np.float64)
    prices[0] = params.p0
    prices[1:] = tail
    bad = prices <= 0
    if np.any(bad):
        raise PathCrossedZeroError(step=int(np.argmax(bad)))
    return PricePath(prices=prices, increments=increments, seed=seed)


def bm_density(p, t, p0, sigma0):
    """Gaussian density of the additive walk at time t.

    N(p0, sigma0^2 * t) evaluated at p.  This is the nominal density of
    both walk kinds before any zero-boundary effect; it assigns (tiny)
    mass to negative prices, which is exactly the regime issue the
    analytic integrals guard against.
    """
    if t <= 0:
        raise DomainError(f"t must be positive, got {t}")
    if p0 <= 0 or sigma0 <= 0:
        raise DomainError("p0 and sigma0 must be positive")
    p = np.asarray(p, dtype=np.float64)
    var = sigma0 * sigma0 * t
    out = np.exp(-((p - p0) ** 2) / (2.0 * var)) / np.sqrt(2.0 * np.pi * var)
    return float(out) if out.ndim == 0 else out


def gbm_density(p, t, p0, sigma0):
    """Lognormal density matched to the walk at time t.

    A driftless geometric walk with relative volatility sigma = sigma0
    / p0 has the same mean p0 and, to leading order, the same variance
    sigma0^2 * t, but its support stays on p > 0:

        density = exp(-(ln(p / p0) + v / 2)^2 / (2 v)) / (p sqrt(2 pi v))

    with v = sigma^2 * t.  Comparing it against bm_density shows how
    little the positivity correction matters at short horizons.
    """
    if t <= 0:
        raise DomainError(f"t must be positive, got {t}")
    if p0 <= 0 or sigma0 <= 0:
        raise DomainError("p0 and sigma0 must be positive")
    p = np.asarray(p, dtype=np.float64)
    if np.any(p <= 0):
        raise DomainError("price must be positive")
    v = (sigma0 / p0) ** 2 * t
    log_ratio = np.log(p / p0)
    out = np.exp(-((log_ratio + 0.5 * v) ** 2) / (2.0 * v)) / (
        p * np.sqrt(2.0 * np.pi * v)
    )
    return float(out) if out.ndim == 0 else out
