"""Constant-product pool state and per-move loss functions.

A pool holding x of the risky token and y of the numeraire with
invariant x*y = L^2 quotes the price p = y/x.  Both reserves follow
from L and p alone:

    x = L / sqrt(p)        y = L * sqrt(p)

Values are expressed in x-token units throughout, so a portfolio worth
V at price p holds the equivalent of V risky tokens.
"""

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .errors import DomainError

# relative slack for the x*y = L^2 and p = y/x reconstruction checks
_STATE_RTOL = 1e-12


@dataclass(frozen=True)
class Anchor:
    """Initial deposit that fixes the pool's liquidity.

    p0 is the price at deposit time and x0 the risky-token amount, so
    the matching numeraire amount is y0 = x0 * p0 and the liquidity is
    L = sqrt(x0 * y0) = x0 * sqrt(p0).
    """

    p0: float
    x0: float

    def __post_init__(self):
        if self.p0 <= 0:
            raise DomainError(f"anchor price must be positive, got {self.p0}")
        if self.x0 <= 0:
            raise DomainError(f"anchor deposit must be positive, got {self.x0}")

    @property
    def L(self):
        return self.x0 * sqrt(self.p0)

    @property
    def y0(self):
        return self.x0 * self.p0


@dataclass(frozen=True)
class PoolState:
    """Reserves of a constant-product pool at one price point."""

    L: float
    x: float
    y: float
    p: float

    def __post_init__(self):
        for name in ("L", "x", "y", "p"):
            v = getattr(self, name)
            if v <= 0:
                raise DomainError(f"pool {name} must be positive, got {v}")
        if abs(self.x * self.y - self.L * self.L) > _STATE_RTOL * self.L * self.L:
            raise DomainError("pool reserves break the x*y = L^2 invariant")
        if abs(self.y / self.x - self.p) > _STATE_RTOL * self.p:
            raise DomainError("pool price disagrees with y/x")


def pool_at_price(anchor, p):
    """Pool reserves after arbitrage has moved the price to p.

    x = x0 * sqrt(p0 / p) and y = x0 * sqrt(p0 * p), which keeps
    x * y = x0^2 * p0 = L^2.
    """
    if p <= 0:
        raise DomainError(f"price must be positive, got {p}")
    x = anchor.x0 * sqrt(anchor.p0 / p)
    y = anchor.x0 * sqrt(anchor.p0 * p)
    return PoolState(L=anchor.L, x=x, y=y, p=p)


def position_value(pool):
    """Pool position value in x-token units: x + y/p = 2 L / sqrt(p)."""
    return 2.0 * pool.L / sqrt(pool.p)


def hodl_value(anchor, p):
    """Value of never depositing: hold x0 and y0, worth x0 + y0/p at p."""
    if p <= 0:
        raise DomainError(f"price must be positive, got {p}")
    return anchor.x0 + anchor.y0 / p


def _loss_factor(ratio):
    # (1 - sqrt(ratio))^2, the shared kernel of il and the exact LVR
    # increment.  Keeping one evaluation sequence makes the two routes
    # agree bitwise when fed the same ratio and scale.
    s = 1.0 - np.sqrt(ratio)
    return s * s


def _as_value(a):
    # collapse 0-d arrays back to python floats so scalar calls stay scalar
    return float(a) if np.ndim(a) == 0 else a


def il(anchor, p):
    """Impermanent loss at price p, in x-token units.

    il = hodl - pool = x0 * (1 - sqrt(p0 / p))^2.  Accepts a scalar or
    an array of prices; every price must be positive.
    """
    p = np.asarray(p, dtype=np.float64)
    if np.any(p <= 0):
        raise DomainError("price must be positive")
    return _as_value(anchor.x0 * _loss_factor(anchor.p0 / p))


def lvr_increment_exact(p, dp, L):
    """Arbitrage profit handed out on one price move p -> p + dp.

    The arbitrageur buys dx = (L / sqrt(p)) * (1 - sqrt(p / (p + dp)))
    from the pool and is left, after marking at the new price, with

        lvr = (L / sqrt(p)) * (1 - sqrt(p / (p + dp)))^2

    in x-token units.  Positive for any dp != 0 and any trade direction.
    Accepts scalars or arrays; p and p + dp must stay positive.
    """
    p = np.asarray(p, dtype=np.float64)
    dp = np.asarray(dp, dtype=np.float64)
    pn = p + dp
    if np.any(p <= 0):
        raise DomainError("price must be positive")
    if np.any(pn <= 0):
        raise DomainError("price move crosses zero: p + dp must stay positive")
    return _as_value((L / np.sqrt(p)) * _loss_factor(p / pn))


def lvr_increment_approx(p, dp, L):
    """Second-order approximation of lvr_increment_exact.

    Expanding the square root for small dp/p gives

        lvr ~= (L / 4) * dp^2 / p^(5/2)

    which is the leading term of the exact increment and the form whose
    per-step sum turns into an integral against dp^2.
    """
    p = np.asarray(p, dtype=np.float64)
    dp = np.asarray(dp, dtype=np.float64)
    if np.any(p <= 0):
        raise DomainError("price must be positive")
    return _as_value((L / 4.0) * (dp * dp) / (p * p * np.sqrt(p)))
