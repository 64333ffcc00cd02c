"""Figure definitions and rendering.

Six figures cover the toolkit's outputs: one realized walk at two
lengths, the final-price histogram with its Gaussian overlay, the
additive-vs-geometric density comparison, the IL and LVR histograms,
and the expected-IL curve against the linear law.  Rendering is a pure
function of the input files: all inputs are parsed and validated
before the canvas is touched, and identical inputs produce identical
plotted series and image bytes.
"""

from dataclasses import dataclass
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .parse import FigureInputError, read_report, read_table

# fixed hash salt and no date metadata keep image bytes reproducible
plt.rcParams["svg.hashsalt"] = "ammloss-figures"


@dataclass(frozen=True)
class Series:
    """One CSV-backed line: file, expected header, legend label."""

    path: Path
    header: tuple
    label: str


@dataclass(frozen=True)
class FigureSpec:
    """Inputs and presentation of one figure.

    kind selects the layout: "lines" plots every series; "histogram"
    draws a report's histogram as a density; "histogram_density" adds
    the first series as an overlay on top of the histogram.
    """

    name: str
    kind: str
    xlabel: str
    ylabel: str
    title: str
    series: tuple = ()
    report: Path | None = None


def preset_figures(data_dir):
    """The six standard figures, keyed by figure name."""
    d = Path(data_dir)
    return {
        "single-run-path": FigureSpec(
            name="single_run_path",
            kind="lines",
            xlabel="step",
            ylabel="price",
            title="Price movement of a single run",
            series=(
                Series(d / "path_steps5000.csv", ("step", "price"), "5000 steps"),
                Series(d / "path_steps20000.csv", ("step", "price"), "20000 steps"),
            ),
        ),
        "final-price-distribution": FigureSpec(
            name="final_price_distribution",
            kind="histogram_density",
            xlabel="final price",
            ylabel="density",
            title="Distribution of final prices",
            report=d / "final_price_report.json",
            series=(
                Series(d / "density_bm_t5000.csv", ("p", "density"), "Gaussian density"),
            ),
        ),
        "density-comparison": FigureSpec(
            name="density_comparison",
            kind="lines",
            xlabel="price",
            ylabel="density",
            title="Additive vs geometric walk densities",
            series=(
                Series(d / "density_bm_t20000.csv", ("p", "density"), "additive (Gaussian)"),
                Series(d / "density_gbm_t20000.csv", ("p", "density"), "geometric (lognormal)"),
            ),
        ),
        "il-distribution": FigureSpec(
            name="il_distribution",
            kind="histogram",
            xlabel="impermanent loss (x-token units)",
            ylabel="density",
            title="Distribution of IL over the ensemble",
            report=d / "il_report.json",
        ),
        "lvr-distribution": FigureSpec(
            name="lvr_distribution",
            kind="histogram",
            xlabel="loss-versus-rebalancing (x-token units)",
            ylabel="density",
            title="Distribution of LVR over the ensemble",
            report=d / "lvr_report.json",
        ),
        "expected-il-curve": FigureSpec(
            name="expected_il_curve",
            kind="lines",
            xlabel="time (steps)",
            ylabel="expected loss (x-token units)",
            title="Expected IL against the linear law",
            series=(
                Series(d / "curve_il.csv", ("t", "value"), "quadrature"),
                Series(d / "curve_linear.csv", ("t", "value"), "linear law"),
            ),
        ),
    }

FIGURE_NAMES = tuple(preset_figures(".").keys())

_KINDS = ("lines", "histogram", "histogram_density")


def render(spec, out_dir):
    """Render one figure to PNG and SVG, returning the plotted data.

    The returned dict holds every plotted series plus, for histogram
    kinds, the integrated areas of the histogram and of any overlay
    restricted to the histogram's support.  Inputs are fully parsed
    before any drawing, so a schema error never leaves a partial
    image behind.
    """
    if spec.kind not in _KINDS:
        raise ValueError(f"unknown figure kind {spec.kind!r}")
    report = read_report(spec.report) if spec.kind != "lines" else None
    loaded = [(s, read_table(s.path, s.header)) for s in spec.series]

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    meta = {"series": {}, "areas": {}}
    try:
        if report is not None:
            edges = report["edges"]
            widths = np.diff(edges)
            density = report["counts"] / (report["runs"] * widths)
            ax.stairs(density, edges, fill=True, alpha=0.45,
                      label=f"{report['metric']} histogram")
            meta["series"]["histogram"] = (edges, density)
            meta["areas"]["histogram"] = float(np.sum(density * widths))
        for s, cols in loaded:
            x, y = cols[s.header[0]], cols[s.header[1]]
            ax.plot(x, y, label=s.label, linewidth=1.2)
            meta["series"][s.label] = (x, y)
            if report is not None and spec.kind == "histogram_density":
                lo, hi = report["edges"][0], report["edges"][-1]
                mask = (x >= lo) & (x <= hi)
                if np.count_nonzero(mask) < 2:
                    raise FigureInputError(
                        f"{s.path}: overlay grid does not cover the histogram range"
                    )
                meta["areas"]["overlay"] = float(np.trapezoid(y[mask], x[mask]))
        ax.set_xlabel(spec.xlabel)
        ax.set_ylabel(spec.ylabel)
        ax.set_title(spec.title)
        ax.legend(loc="best")
        fig.tight_layout()
        png = out_dir / f"{spec.name}.png"
        svg = out_dir / f"{spec.name}.svg"
        fig.savefig(png, dpi=150)
        fig.savefig(svg, metadata={"Date": None})
    finally:
        plt.close(fig)
    meta["png"] = png
    meta["svg"] = svg
    return meta
