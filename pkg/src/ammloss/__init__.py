"""Impermanent loss and loss-versus-rebalancing toolkit.

Simulates additive price walks through a constant-product pool,
accumulates the two pathwise loss metrics, and checks their Monte
Carlo means against independent quadrature of the short-time Gaussian
law.  The headline fact the package quantifies: both losses share the
same expectation while their distributions look nothing alike.
"""

from .analytic import (
    LINEAR_REGIME_COEFF,
    AnalyticCurve,
    AnalyticParams,
    curve,
    expected_il,
    expected_lvr,
    linear_approx,
    linear_horizon,
)
from .cfmm import (
    Anchor,
    PoolState,
    hodl_value,
    il,
    lvr_increment_approx,
    lvr_increment_exact,
    pool_at_price,
    position_value,
)
from .ensemble import (
    EnsembleConfig,
    EnsembleReport,
    Histogram,
    RunRecords,
    collect_runs,
    derive_run_seed,
    run_ensemble,
    summarize,
)
from .errors import DomainError, PathCrossedZeroError, RegimeError
from .metrics import PathMetrics, compute_metrics, lvr_rate
from .walks import PricePath, WalkParams, bm_density, gbm_density, generate_path

__version__ = "0.1.0"

__all__ = [
    "Anchor",
    "AnalyticCurve",
    "AnalyticParams",
    "DomainError",
    "EnsembleConfig",
    "EnsembleReport",
    "Histogram",
    "LINEAR_REGIME_COEFF",
    "PathCrossedZeroError",
    "PathMetrics",
    "PoolState",
    "PricePath",
    "RegimeError",
    "RunRecords",
    "WalkParams",
    "bm_density",
    "collect_runs",
    "compute_metrics",
    "curve",
    "derive_run_seed",
    "expected_il",
    "expected_lvr",
    "gbm_density",
    "generate_path",
    "hodl_value",
    "il",
    "linear_approx",
    "linear_horizon",
    "lvr_increment_approx",
    "lvr_increment_exact",
    "lvr_rate",
    "pool_at_price",
    "position_value",
    "run_ensemble",
    "summarize",
]
