"""Monte Carlo ensembles of walks with deterministic seeding.

Each run i draws its generator seed from the pair (master_seed, i), so
the sample for run i never depends on how many runs surround it or on
which worker executes it.  Workers write into disjoint slots of
preallocated arrays, which keeps multi-worker results byte-identical
to single-worker ones.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import sqrt

import numpy as np

from .cfmm import Anchor
from .errors import PathCrossedZeroError
from .metrics import MODES, compute_metrics
from .walks import WalkParams, generate_path


@dataclass(frozen=True)
class EnsembleConfig:
    walk: WalkParams
    anchor: Anchor
    runs: int
    master_seed: int
    histogram_bins: int = 100
    increments_mode: str = "exact"

    def __post_init__(self):
        if self.runs < 2:
            raise ValueError(f"runs must be at least 2, got {self.runs}")
        if self.master_seed < 0:
            raise ValueError(f"master_seed must be non-negative, got {self.master_seed}")
        if self.histogram_bins < 1:
            raise ValueError(f"histogram_bins must be positive, got {self.histogram_bins}")
        if self.increments_mode not in MODES:
            raise ValueError(f"increments_mode must be one of {MODES}")
        if self.walk.p0 != self.anchor.p0:
            raise ValueError(
                f"walk starts at {self.walk.p0} but anchor expects {self.anchor.p0}"
            )


@dataclass(frozen=True)
class Histogram:
    bin_edges: np.ndarray
    counts: np.ndarray


@dataclass(frozen=True)
class EnsembleReport:
    metric_name: str
    mean: float
    std_dev: float
    std_err: float
    median: float
    runs: int
    histogram: Histogram


@dataclass(frozen=True)
class RunRecords:
    """Per-run outputs, index-aligned with run order."""

    seeds: np.ndarray
    final_price: np.ndarray
    il_final: np.ndarray
    lvr_total: np.ndarray


def derive_run_seed(master_seed, run_index):
    """Stable 64-bit seed for one run, independent of all other runs."""
    ss = np.random.SeedSequence((master_seed, run_index))
    return int(ss.generate_state(1, np.uint64)[0])


def collect_runs(config, workers=1):
    """Simulate every run and return the per-run records.

    A path that crosses zero aborts the whole ensemble; the error names
    the offending run index and step.
    """
    n = config.runs
    seeds = np.array(
        [derive_run_seed(config.master_seed, i) for i in range(n)], dtype=np.uint64
    )
    final_price = np.empty(n, dtype=np.float64)
    il_final = np.empty(n, dtype=np.float64)
    lvr_total = np.empty(n, dtype=np.float64)

    def do_range(lo, hi):
        for i in range(lo, hi):
            try:
                path = generate_path(config.walk, int(seeds[i]))
            except PathCrossedZeroError as e:
                raise PathCrossedZeroError(step=e.step, run_index=i) from None
            m = compute_metrics(path, config.anchor, config.increments_mode)
            final_price[i] = path.prices[-1]
            il_final[i] = m.il_final
            lvr_total[i] = m.lvr_total

    if workers <= 1:
        do_range(0, n)
    else:
        # small chunks so idle workers keep stealing leftover ranges
        chunk = max(1, -(-n // (workers * 8)))
        bounds = [(lo, min(lo + chunk, n)) for lo in range(0, n, chunk)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(do_range, lo, hi) for lo, hi in bounds]
            for f in futures:
                f.result()
    return RunRecords(
        seeds=seeds, final_price=final_price, il_final=il_final, lvr_total=lvr_total
    )


def summarize(values, bins, name="values"):
    """Sample statistics plus an equal-width histogram over [min, max]."""
    values = np.asarray(values, dtype=np.float64)
    if values.ndim != 1 or values.size < 2:
        raise ValueError("summarize needs a flat sample of at least 2 values")
    if bins < 1:
        raise ValueError(f"bins must be positive, got {bins}")
    counts, edges = np.histogram(values, bins=bins)
    std_dev = float(np.std(values, ddof=1))
    return EnsembleReport(
        metric_name=name,
        mean=float(np.mean(values)),
        std_dev=std_dev,
        std_err=std_dev / sqrt(values.size),
        median=float(np.median(values)),
        runs=int(values.size),
        histogram=Histogram(bin_edges=edges, counts=counts),
    )


def run_ensemble(config, workers=1):
    """Run the ensemble and summarize il_final, lvr_total, final_price.

    Returns (il_report, lvr_report, final_price_report, records).
    """
    rec = collect_runs(config, workers=workers)
    bins = config.histogram_bins
    return (
        summarize(rec.il_final, bins, name="il"),
        summarize(rec.lvr_total, bins, name="lvr"),
        summarize(rec.final_price, bins, name="final_price"),
        rec,
    )
