"""CSV and JSON emission with exact float round-tripping.

Every float is written with 17 significant digits, which is enough to
reconstruct the exact binary64 value on parse.  Files are written to a
temporary name in the target directory and renamed into place, so a
reader never observes a half-written file and reruns either replace the
file or leave identical bytes.
"""

import json
import os
import tempfile
from pathlib import Path

import numpy as np

from .ensemble import EnsembleReport, Histogram


def fmt(x):
    """Shortest 17-significant-digit decimal form of a float."""
    return format(float(x), ".17g")


def atomic_write_text(target, text):
    """Write text to target via a same-directory temp file and rename."""
    target = Path(target)
    fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="\n") as f:
            f.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _csv(header, rows):
    lines = [header]
    lines.extend(",".join(cells) for cells in rows)
    return "\n".join(lines) + "\n"


def write_path_csv(path_obj, target):
    """One realized walk as step,price rows (step 0 is the anchor)."""
    rows = ((str(i), fmt(p)) for i, p in enumerate(path_obj.prices))
    atomic_write_text(target, _csv("step,price", rows))


def write_runs_csv(records, target):
    """Per-run ensemble outputs, one row per run in run order."""
    rows = (
        (str(i), str(int(records.seeds[i])), fmt(records.final_price[i]),
         fmt(records.il_final[i]), fmt(records.lvr_total[i]))
        for i in range(len(records.seeds))
    )
    atomic_write_text(target, _csv("run_index,seed,final_price,il_final,lvr_total", rows))


def write_metrics_csv(rows, target):
    """Rows of (seed, il_final, lvr_total) for externally driven runs."""
    out = ((str(int(s)), fmt(a), fmt(b)) for s, a, b in rows)
    atomic_write_text(target, _csv("seed,il_final,lvr_total", out))


def write_curve_csv(curve_obj, target):
    rows = ((fmt(t), fmt(v)) for t, v in zip(curve_obj.times, curve_obj.values))
    atomic_write_text(target, _csv("t,value", rows))


def write_density_csv(grid, density, target):
    rows = ((fmt(p), fmt(d)) for p, d in zip(grid, density))
    atomic_write_text(target, _csv("p,density", rows))


def read_csv_columns(source):
    """Parse a CSV written by this module into (header, string columns)."""
    text = Path(source).read_text()
    lines = [ln for ln in text.split("\n") if ln]
    header = lines[0].split(",")
    cols = {name: [] for name in header}
    for ln in lines[1:]:
        cells = ln.split(",")
        if len(cells) != len(header):
            raise ValueError(f"{source}: row has {len(cells)} cells, header has {len(header)}")
        for name, cell in zip(header, cells):
            cols[name].append(cell)
    return header, cols


def to_json(value, indent=0):
    """Deterministic JSON text with fmt-formatted floats.

    Dicts render one key per line in insertion order; lists render
    inline.  Only the types this package emits are supported.
    """
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (bool, type(None))):
        raise TypeError(f"unsupported JSON value: {value!r}")
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return fmt(value)
    if isinstance(value, (list, tuple, np.ndarray)):
        return "[" + ", ".join(to_json(v) for v in value) + "]"
    if isinstance(value, dict):
        pad = " " * (indent + 2)
        body = ",\n".join(
            f"{pad}{json.dumps(k)}: {to_json(v, indent + 2)}" for k, v in value.items()
        )
        return "{\n" + body + "\n" + " " * indent + "}"
    raise TypeError(f"unsupported JSON value: {value!r}")


def report_to_json(report):
    doc = {
        "metric": report.metric_name,
        "mean": report.mean,
        "std_dev": report.std_dev,
        "std_err": report.std_err,
        "median": report.median,
        "runs": report.runs,
        "histogram": {
            "edges": report.histogram.bin_edges,
            "counts": [int(c) for c in report.histogram.counts],
        },
    }
    return to_json(doc) + "\n"


def write_report_json(report, target):
    atomic_write_text(target, report_to_json(report))


def read_report_json(source):
    """Rebuild an EnsembleReport from its JSON form, bit-exact."""
    d = json.loads(Path(source).read_text())
    return EnsembleReport(
        metric_name=d["metric"],
        mean=float(d["mean"]),
        std_dev=float(d["std_dev"]),
        std_err=float(d["std_err"]),
        median=float(d["median"]),
        runs=int(d["runs"]),
        histogram=Histogram(
            bin_edges=np.asarray(d["histogram"]["edges"], dtype=np.float64),
            counts=np.asarray(d["histogram"]["counts"], dtype=np.int64),
        ),
    )
