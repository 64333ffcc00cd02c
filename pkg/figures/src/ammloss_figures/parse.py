"""Strict readers for the simulation toolkit's CSV and JSON outputs.

Every reader validates the schema it expects and fails with an error
naming the offending file and, for CSV, the 1-based line number.  The
plotting layer never repairs or reinterprets malformed data.
"""

import json
from pathlib import Path

import numpy as np


class FigureInputError(ValueError):
    """An input file is missing or does not match its schema."""


def _fail(path, message, line=None):
    where = f"{path}:{line}" if line is not None else str(path)
    raise FigureInputError(f"{where}: {message}")


def read_table(path, expected_header):
    """Parse a CSV with the given header into named float columns."""
    path = Path(path)
    if not path.is_file():
        raise FigureInputError(f"{path}: input file not found")
    lines = path.read_text().splitlines()
    if not lines:
        _fail(path, "file is empty", line=1)
    header = lines[0].split(",")
    if header != list(expected_header):
        _fail(path, f"expected header {','.join(expected_header)!r}, got {lines[0]!r}", line=1)
    columns = {name: [] for name in header}
    for lineno, raw in enumerate(lines[1:], start=2):
        cells = raw.split(",")
        if len(cells) != len(header):
            _fail(path, f"expected {len(header)} cells, got {len(cells)}", line=lineno)
        for name, cell in zip(header, cells):
            try:
                columns[name].append(float(cell))
            except ValueError:
                _fail(path, f"column {name!r} holds non-numeric value {cell!r}", line=lineno)
    if not columns[header[0]]:
        _fail(path, "no data rows", line=2)
    return {name: np.array(vals, dtype=np.float64) for name, vals in columns.items()}


_REPORT_KEYS = {"metric", "mean", "std_dev", "std_err", "median", "runs", "histogram"}


def read_report(path):
    """Parse a metric report JSON with histogram edges and counts."""
    path = Path(path)
    if not path.is_file():
        raise FigureInputError(f"{path}: input file not found")
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        _fail(path, f"invalid JSON: {e.msg}", line=e.lineno)
    missing = _REPORT_KEYS - set(doc)
    if missing:
        _fail(path, f"missing keys: {', '.join(sorted(missing))}")
    hist = doc["histogram"]
    if not isinstance(hist, dict) or set(hist) != {"edges", "counts"}:
        _fail(path, "histogram must hold exactly the keys edges and counts")
    edges = np.asarray(hist["edges"], dtype=np.float64)
    counts = np.asarray(hist["counts"], dtype=np.float64)
    if edges.size != counts.size + 1:
        _fail(path, f"{counts.size} counts need {counts.size + 1} edges, got {edges.size}")
    if np.any(np.diff(edges) <= 0):
        _fail(path, "histogram edges are not strictly increasing")
    if int(round(counts.sum())) != int(doc["runs"]):
        _fail(path, f"histogram counts sum to {counts.sum():.0f}, report says {doc['runs']} runs")
    return {
        "metric": doc["metric"],
        "mean": float(doc["mean"]),
        "std_dev": float(doc["std_dev"]),
        "std_err": float(doc["std_err"]),
        "median": float(doc["median"]),
        "runs": int(doc["runs"]),
        "edges": edges,
        "counts": counts,
    }
