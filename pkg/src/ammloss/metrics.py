"""Per-path loss metrics.

Two quantities are accumulated along a realized path:

    il_final   impermanent loss of the endpoint, a function of the
               final price only
    lvr_total  sum of per-move arbitrage losses, a function of the
               whole path

Both are expressed in x-token units against the same anchor.
"""

from dataclasses import dataclass

import numpy as np

from .cfmm import il, lvr_increment_approx, lvr_increment_exact

MODES = ("exact", "approx")


@dataclass(frozen=True)
class PathMetrics:
    il_final: float
    lvr_total: float
    increments_mode: str
    lvr_series: np.ndarray | None = None


def lvr_rate(p, sigma0, L):
    """Expected arbitrage loss per unit time at price p.

    One unit-time step moves the price by +-sigma0 (or by a draw with
    that standard deviation), so the expected squared move is sigma0^2
    and the per-step loss approximation becomes the rate

        lvr_rate = L * sigma0^2 / (4 * p^(5/2))

    This delegates to lvr_increment_approx with dp = sigma0, which is
    the identical expression.
    """
    return lvr_increment_approx(p, sigma0, L)


def compute_metrics(path, anchor, increments_mode="exact", keep_series=False):
    """Accumulate il_final and lvr_total along one path.

    The path must start at the anchor price.  LVR terms are evaluated
    from the stored exact increments, not from price differences, so in
    approx mode the total is bit-for-bit the sum of lvr_rate over the
    pre-move prices for a binary walk.  With keep_series the running
    cumulative LVR is attached and lvr_total is its last element.
    """
    if increments_mode not in MODES:
        raise ValueError(f"increments_mode must be one of {MODES}, got {increments_mode!r}")
    if path.prices[0] != anchor.p0:
        raise ValueError(
            f"path starts at {path.prices[0]}, anchor expects {anchor.p0}"
        )
    pre = path.prices[:-1]
    inc = path.increments
    if increments_mode == "exact":
        terms = lvr_increment_exact(pre, inc, anchor.L)
    else:
        terms = lvr_increment_approx(pre, inc, anchor.L)
    terms = np.atleast_1d(np.asarray(terms, dtype=np.float64))
    il_final = il(anchor, float(path.prices[-1]))
    series = None
    if keep_series:
        series = np.cumsum(terms)
        lvr_total = float(series[-1]) if series.size else 0.0
    else:
        lvr_total = float(np.sum(terms))
    return PathMetrics(
        il_final=float(il_final),
        lvr_total=lvr_total,
        increments_mode=increments_mode,
        lvr_series=series,
    )
