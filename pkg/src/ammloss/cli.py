"""Command line front end.

Subcommands map one-to-one onto the library layers:

    path      one realized walk          -> path CSV
    ensemble  Monte Carlo ensemble       -> runs CSV + three report JSONs
    analytic  quadrature loss curve      -> curve CSV
    density   model price densities      -> density CSVs
    compare   ensemble vs quadrature     -> compare JSON

Parameter precedence: explicit flag > --figure preset > --config file >
built-in default.  Exit codes: 0 success, 2 usage or configuration
error, 3 domain error (a price reached zero or a negative horizon),
4 regime error (horizon outside the short-time Gaussian regime).
"""

import argparse
import json
import sys
from math import sqrt
from pathlib import Path

import numpy as np

from .analytic import AnalyticParams, curve, expected_il, expected_lvr, linear_approx
from .cfmm import Anchor
from .ensemble import EnsembleConfig, run_ensemble
from .errors import DomainError, RegimeError
from .fileio import (
    fmt,
    to_json,
    atomic_write_text,
    write_curve_csv,
    write_density_csv,
    write_path_csv,
    write_report_json,
    write_runs_csv,
)
from .walks import WalkParams, bm_density, gbm_density, generate_path


class CliUsageError(Exception):
    """Bad flag combination, preset name or config file."""


DEFAULTS = {
    "p0": 100.0,
    "x0": 100.0,
    "sigma0": 0.01,
    "steps": 5000,
    "runs": 20000,
    "seed": 20240817,
    "bins": 100,
    "mode": "exact",
    "t_max": 5000.0,
    "points": 200,
    "kind": "il",
    "model": "both",
    "workers": 1,
}

_INT_KEYS = {"steps", "runs", "seed", "bins", "points", "workers"}
_FLOAT_KEYS = {"p0", "x0", "sigma0", "t_max"}

# presets reproducing the reference scenarios; extra keys outside the
# flag vocabulary (variants, with_linear, p_min, p_max) steer the
# command body itself
PRESETS = {
    "path": {
        "1": {"p0": 100.0, "sigma0": 0.001, "variants": [5000, 20000]},
    },
    "ensemble": {
        "4-5": {"p0": 100.0, "x0": 100.0, "sigma0": 0.01, "steps": 5000, "runs": 20000},
    },
    "analytic": {
        "il-curve": {
            "p0": 1.0,
            "x0": 1.0,
            "sigma0": 1.0,
            "t_max": 0.0075,
            "points": 200,
            "kind": "il",
            "with_linear": True,
        },
    },
    "density": {
        "3": {
            "p0": 100.0,
            "sigma0": 0.01,
            "t_max": 20000.0,
            "points": 401,
            "model": "both",
            "p_min": 80.0,
            "p_max": 120.0,
        },
    },
    "compare": {
        "headline": {},
    },
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ammloss",
        description="impermanent loss and loss-versus-rebalancing toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(sp, *names):
        for name in names:
            flag = "--" + name.replace("_", "-")
            if name in _INT_KEYS:
                sp.add_argument(flag, type=int, default=None)
            elif name in _FLOAT_KEYS:
                sp.add_argument(flag, type=float, default=None)
            elif name == "mode":
                sp.add_argument(flag, choices=("exact", "approx"), default=None)
            elif name == "kind":
                sp.add_argument(flag, choices=("il", "lvr", "linear"), default=None)
            elif name == "model":
                sp.add_argument(flag, choices=("bm", "gbm", "both"), default=None)
        sp.add_argument("--out", type=Path, default=Path("."))
        sp.add_argument("--figure", default=None)
        sp.add_argument("--config", type=Path, default=None)

    add(sub.add_parser("path", help="emit one realized walk"),
        "p0", "sigma0", "steps", "seed")
    add(sub.add_parser("ensemble", help="run a Monte Carlo ensemble"),
        "p0", "x0", "sigma0", "steps", "runs", "seed", "bins", "mode", "workers")
    add(sub.add_parser("analytic", help="emit a quadrature loss curve"),
        "p0", "x0", "sigma0", "kind", "t_max", "points")
    density_parser = sub.add_parser("density", help="emit model price densities")
    add(density_parser, "p0", "sigma0", "model", "t_max", "points")
    density_parser.add_argument("--p-min", type=float, default=None)
    density_parser.add_argument("--p-max", type=float, default=None)
    add(sub.add_parser("compare", help="ensemble means against quadrature"),
        "p0", "x0", "sigma0", "steps", "runs", "seed", "bins", "mode", "workers")
    return parser


def _load_config(path):
    try:
        raw = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise CliUsageError(f"cannot read config {path}: {e}") from None
    if not isinstance(raw, dict):
        raise CliUsageError(f"config {path} must hold a JSON object")
    out = {}
    for key, value in raw.items():
        if key not in DEFAULTS:
            raise CliUsageError(f"config {path}: unknown key {key!r}")
        out[key] = int(value) if key in _INT_KEYS else (
            float(value) if key in _FLOAT_KEYS else value
        )
    return out


def _merge(args, command):
    """Apply flag > preset > config > default and return (params, preset)."""
    eff = dict(DEFAULTS)
    if args.config is not None:
        eff.update(_load_config(args.config))
    preset = None
    if args.figure is not None:
        table = PRESETS[command]
        if args.figure not in table:
            known = ", ".join(sorted(table)) or "none"
            raise CliUsageError(
                f"unknown figure preset {args.figure!r} for {command} (known: {known})"
            )
        preset = table[args.figure]
        eff.update({k: v for k, v in preset.items() if k in eff})
    for key in DEFAULTS:
        flag_value = getattr(args, key, None)
        if flag_value is not None:
            eff[key] = flag_value
    return eff, preset


def _say(out_path):
    print(f"wrote {out_path}")


def cmd_path(eff, out_dir, preset):
    variants = preset.get("variants") if preset else None
    for steps in variants or [eff["steps"]]:
        params = WalkParams(p0=eff["p0"], sigma0=eff["sigma0"], steps=steps)
        path = generate_path(params, eff["seed"])
        name = f"path_steps{steps}.csv" if variants else "path.csv"
        target = out_dir / name
        write_path_csv(path, target)
        _say(target)


def _ensemble_outputs(eff, out_dir):
    config = EnsembleConfig(
        walk=WalkParams(p0=eff["p0"], sigma0=eff["sigma0"], steps=eff["steps"]),
        anchor=Anchor(p0=eff["p0"], x0=eff["x0"]),
        runs=eff["runs"],
        master_seed=eff["seed"],
        histogram_bins=eff["bins"],
        increments_mode=eff["mode"],
    )
    return run_ensemble(config, workers=eff["workers"])


def cmd_ensemble(eff, out_dir):
    il_rep, lvr_rep, price_rep, rec = _ensemble_outputs(eff, out_dir)
    for report, name in (
        (il_rep, "il_report.json"),
        (lvr_rep, "lvr_report.json"),
        (price_rep, "final_price_report.json"),
    ):
        target = out_dir / name
        write_report_json(report, target)
        _say(target)
    target = out_dir / "runs.csv"
    write_runs_csv(rec, target)
    _say(target)
    print(
        f"mean_il={fmt(il_rep.mean)} mean_lvr={fmt(lvr_rep.mean)} "
        f"mean_final_price={fmt(price_rep.mean)} runs={rec.seeds.size}"
    )


def cmd_analytic(eff, out_dir, preset):
    params = AnalyticParams(p0=eff["p0"], x0=eff["x0"], sigma0=eff["sigma0"])
    kinds = [eff["kind"]]
    if preset and preset.get("with_linear") and "linear" not in kinds:
        kinds.append("linear")
    for kind in kinds:
        canonical = "linear_approx" if kind == "linear" else kind
        c = curve(params, canonical, eff["t_max"], eff["points"])
        target = out_dir / f"curve_{kind}.csv"
        write_curve_csv(c, target)
        _say(target)


def cmd_density(eff, out_dir):
    t = eff["t_max"]
    if t <= 0:
        raise DomainError(f"t must be positive, got {t}")
    if (eff["p_min"] is None) != (eff["p_max"] is None):
        raise CliUsageError("--p-min and --p-max must be given together")
    if eff["p_min"] is not None:
        lo, hi = eff["p_min"], eff["p_max"]
        if lo >= hi:
            raise CliUsageError(f"--p-min {lo} must be below --p-max {hi}")
    else:
        # five standard deviations around p0, clipped away from zero
        spread = 5.0 * eff["sigma0"] * sqrt(t)
        lo = max(eff["p0"] - spread, 1e-9 * eff["p0"])
        hi = eff["p0"] + spread
    grid = np.linspace(lo, hi, eff["points"])
    models = ("bm", "gbm") if eff["model"] == "both" else (eff["model"],)
    for model in models:
        fn = bm_density if model == "bm" else gbm_density
        dens = fn(grid, t, eff["p0"], eff["sigma0"])
        target = out_dir / f"density_{model}_t{t:g}.csv"
        write_density_csv(grid, dens, target)
        _say(target)


def cmd_compare(eff, out_dir):
    il_rep, lvr_rep, price_rep, rec = _ensemble_outputs(eff, out_dir)
    params = AnalyticParams(p0=eff["p0"], x0=eff["x0"], sigma0=eff["sigma0"])
    t = float(eff["steps"])
    a_il = expected_il(params, t)
    a_lvr = expected_lvr(params, t)
    lin = linear_approx(params, t)
    z_il = (il_rep.mean - a_il) / il_rep.std_err
    z_lvr = (lvr_rep.mean - a_lvr) / lvr_rep.std_err
    doc = {
        "mc_mean_il": il_rep.mean,
        "se_il": il_rep.std_err,
        "mc_mean_lvr": lvr_rep.mean,
        "se_lvr": lvr_rep.std_err,
        "analytic_il": a_il,
        "analytic_lvr": a_lvr,
        "linear_approx": lin,
        "z_il": z_il,
        "z_lvr": z_lvr,
        "runs": eff["runs"],
        "steps": eff["steps"],
    }
    target = out_dir / "compare.json"
    atomic_write_text(target, to_json(doc) + "\n")
    _say(target)
    print(
        f"mc_mean_il={fmt(il_rep.mean)} analytic_il={fmt(a_il)} z_il={z_il:+.2f}"
    )
    print(
        f"mc_mean_lvr={fmt(lvr_rep.mean)} analytic_lvr={fmt(a_lvr)} z_lvr={z_lvr:+.2f}"
    )
    print(f"linear_approx={fmt(lin)}")


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if e.code is not None else 0
    try:
        eff, preset = _merge(args, args.command)
        out_dir = args.out
        out_dir.mkdir(parents=True, exist_ok=True)
        if args.command == "path":
            cmd_path(eff, out_dir, preset)
        elif args.command == "ensemble":
            cmd_ensemble(eff, out_dir)
        elif args.command == "analytic":
            cmd_analytic(eff, out_dir, preset)
        elif args.command == "density":
            for key in ("p_min", "p_max"):
                flag_value = getattr(args, key)
                eff[key] = flag_value if flag_value is not None else (preset or {}).get(key)
            cmd_density(eff, out_dir)
        else:
            cmd_compare(eff, out_dir)
    except DomainError as e:
        print(f"domain error: {e}", file=sys.stderr)
        return 3
    except RegimeError as e:
        print(f"regime error: {e}", file=sys.stderr)
        return 4
    except (CliUsageError, ValueError) as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    return 0


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
