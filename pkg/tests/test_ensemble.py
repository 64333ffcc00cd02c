"""Seed derivation, parallel collection, and summary statistics."""

import numpy as np
import pytest

import ammloss.ensemble
from ammloss import (
    Anchor,
    EnsembleConfig,
    PathCrossedZeroError,
    WalkParams,
    collect_runs,
    compute_metrics,
    derive_run_seed,
    generate_path,
    run_ensemble,
    summarize,
)


def _config(runs=40, steps=64, master=7, **kw):
    return EnsembleConfig(
        walk=WalkParams(p0=100.0, sigma0=0.01, steps=steps),
        anchor=Anchor(p0=100.0, x0=100.0),
        runs=runs,
        master_seed=master,
        **kw,
    )


def test_derived_seeds_are_frozen():
    assert derive_run_seed(20240817, 0) == 12092194359371211473
    assert derive_run_seed(20240817, 1) == 12755143670441569613


def test_derived_seeds_depend_on_both_inputs():
    assert derive_run_seed(1, 0) != derive_run_seed(2, 0)
    assert derive_run_seed(1, 0) != derive_run_seed(1, 1)
    assert derive_run_seed(3, 5) == derive_run_seed(3, 5)


def test_collect_runs_is_deterministic():
    a = collect_runs(_config())
    b = collect_runs(_config())
    for name in ("seeds", "final_price", "il_final", "lvr_total"):
        assert np.array_equal(getattr(a, name), getattr(b, name))


def test_worker_count_does_not_change_results():
    base = collect_runs(_config(runs=60), workers=1)
    for workers in (3, 8):
        other = collect_runs(_config(runs=60), workers=workers)
        assert np.array_equal(base.final_price, other.final_price)
        assert np.array_equal(base.il_final, other.il_final)
        assert np.array_equal(base.lvr_total, other.lvr_total)


def test_run_slot_matches_direct_simulation():
    config = _config()
    rec = collect_runs(config)
    seed = derive_run_seed(config.master_seed, 3)
    path = generate_path(config.walk, seed)
    m = compute_metrics(path, config.anchor, config.increments_mode)
    assert rec.seeds[3] == seed
    assert rec.final_price[3] == path.prices[-1]
    assert rec.il_final[3] == m.il_final
    assert rec.lvr_total[3] == m.lvr_total


def test_identical_forced_seeds_collapse_spread(monkeypatch):
    monkeypatch.setattr(ammloss.ensemble, "derive_run_seed", lambda m, i: 999)
    il_rep, lvr_rep, price_rep, _ = run_ensemble(_config(runs=2))
    assert il_rep.std_dev == 0.0
    assert lvr_rep.std_dev == 0.0
    assert price_rep.std_dev == 0.0


def test_reports_carry_metric_names_and_consistent_errors():
    il_rep, lvr_rep, price_rep, rec = run_ensemble(_config(runs=50), workers=2)
    assert (il_rep.metric_name, lvr_rep.metric_name, price_rep.metric_name) == (
        "il", "lvr", "final_price",
    )
    for rep in (il_rep, lvr_rep, price_rep):
        assert rep.runs == 50
        assert rep.std_err == pytest.approx(rep.std_dev / np.sqrt(50.0), rel=1e-15)
        assert int(np.sum(rep.histogram.counts)) == 50
        edges = rep.histogram.bin_edges
        assert edges.size == rep.histogram.counts.size + 1
        assert np.all(np.diff(edges) > 0.0)
    assert il_rep.mean == pytest.approx(float(np.mean(rec.il_final)), rel=1e-15)


def test_summarize_hand_checked_values():
    rep = summarize([1.0, 2.0, 3.0], bins=3)
    assert rep.mean == 2.0
    assert rep.std_dev == 1.0
    assert rep.median == 2.0
    assert rep.std_err == pytest.approx(1.0 / np.sqrt(3.0), rel=1e-15)
    rep = summarize([0.0, 0.0, 0.0, 0.0], bins=4)
    assert rep.mean == 0.0
    assert rep.std_dev == 0.0
    assert int(np.sum(rep.histogram.counts)) == 4


def test_summarize_even_count_median_is_midpoint():
    rep = summarize([1.0, 2.0, 10.0, 20.0], bins=2)
    assert rep.median == 6.0


def test_summarize_histogram_spans_sample_range():
    values = np.array([3.0, 1.0, 2.0, 7.0, 5.0])
    rep = summarize(values, bins=4)
    assert rep.histogram.bin_edges[0] == values.min()
    assert rep.histogram.bin_edges[-1] == values.max()


def test_summarize_large_normal_sample_centers_on_zero():
    rng = np.random.default_rng(314159)
    rep = summarize(rng.standard_normal(100000), bins=50)
    assert abs(rep.mean) < 4.0 / np.sqrt(100000.0)


def test_summarize_contract_errors():
    with pytest.raises(ValueError):
        summarize([1.0], bins=4)
    with pytest.raises(ValueError):
        summarize([1.0, 2.0], bins=0)


def test_config_validation():
    with pytest.raises(ValueError):
        _config(runs=1)
    with pytest.raises(ValueError):
        _config(master=-3)
    with pytest.raises(ValueError):
        _config(histogram_bins=0)
    with pytest.raises(ValueError):
        _config(increments_mode="sloppy")
    with pytest.raises(ValueError):
        EnsembleConfig(
            walk=WalkParams(p0=100.0, sigma0=0.01, steps=8),
            anchor=Anchor(p0=99.0, x0=100.0),
            runs=4,
            master_seed=1,
        )


def test_crossing_aborts_with_run_index():
    with pytest.warns(RuntimeWarning):
        walk = WalkParams(p0=1.0, sigma0=2.0, steps=8)
    config = EnsembleConfig(
        walk=walk, anchor=Anchor(p0=1.0, x0=1.0), runs=8, master_seed=0
    )
    with pytest.raises(PathCrossedZeroError) as err:
        collect_runs(config)
    assert err.value.run_index is not None
    assert err.value.step >= 1
