import json

import numpy as np
import pytest

from ammloss_figures import FIGURE_NAMES, FigureInputError, preset_figures, render


def test_all_six_figures_render(dataset, tmp_path):
    specs = preset_figures(dataset)
    assert len(FIGURE_NAMES) == 6
    for name in FIGURE_NAMES:
        meta = render(specs[name], tmp_path)
        assert meta["png"].stat().st_size > 0
        assert meta["svg"].stat().st_size > 0
        assert meta["series"]


def test_final_price_overlay_area_matches_histogram(dataset, tmp_path):
    specs = preset_figures(dataset)
    meta = render(specs["final-price-distribution"], tmp_path)
    hist = meta["areas"]["histogram"]
    overlay = meta["areas"]["overlay"]
    assert hist == pytest.approx(1.0, rel=1e-12)
    assert abs(overlay - hist) / hist < 0.02


def test_metric_histograms_integrate_to_one(dataset, tmp_path):
    specs = preset_figures(dataset)
    for name in ("il-distribution", "lvr-distribution"):
        meta = render(specs[name], tmp_path)
        assert meta["areas"]["histogram"] == pytest.approx(1.0, rel=1e-12)


def test_rendering_is_pure(dataset, tmp_path):
    spec = preset_figures(dataset)["final-price-distribution"]
    a = render(spec, tmp_path / "a")
    b = render(spec, tmp_path / "b")
    assert a["png"].read_bytes() == b["png"].read_bytes()
    assert a["svg"].read_bytes() == b["svg"].read_bytes()
    for key in a["series"]:
        for xa, xb in zip(a["series"][key], b["series"][key]):
            assert np.array_equal(xa, xb)


def test_series_come_straight_from_the_files(dataset, tmp_path):
    meta = render(preset_figures(dataset)["single-run-path"], tmp_path)
    raw = (dataset / "path_steps5000.csv").read_text().splitlines()
    first = [float(c) for c in raw[1].split(",")]
    x, y = meta["series"]["5000 steps"]
    assert len(x) == 5001
    assert (x[0], y[0]) == tuple(first)


def test_missing_inputs_leave_no_partial_image(tmp_path):
    empty = tmp_path / "empty"
    empty.mkdir()
    out = tmp_path / "out"
    spec = preset_figures(empty)["single-run-path"]
    with pytest.raises(FigureInputError, match="not found"):
        render(spec, out)
    assert not out.exists()


def test_malformed_report_leaves_no_partial_image(dataset, tmp_path):
    data = tmp_path / "data"
    data.mkdir()
    doc = json.loads((dataset / "il_report.json").read_text())
    doc["histogram"]["counts"][0] += 1
    (data / "il_report.json").write_text(json.dumps(doc))
    out = tmp_path / "out"
    with pytest.raises(FigureInputError, match="counts sum"):
        render(preset_figures(data)["il-distribution"], out)
    assert not out.exists()


def test_overlay_must_cover_histogram_range(dataset, tmp_path):
    data = tmp_path / "data"
    data.mkdir()
    (data / "final_price_report.json").write_text(
        (dataset / "final_price_report.json").read_text()
    )
    # grid far away from any observed final price
    (data / "density_bm_t5000.csv").write_text("p,density\n1,0\n2,0\n")
    with pytest.raises(FigureInputError, match="does not cover"):
        render(preset_figures(data)["final-price-distribution"], tmp_path / "out")


def test_unknown_kind_rejected(tmp_path):
    spec = preset_figures(tmp_path)["single-run-path"]
    bad = type(spec)(
        name=spec.name,
        kind="scatter",
        xlabel=spec.xlabel,
        ylabel=spec.ylabel,
        title=spec.title,
        series=spec.series,
    )
    with pytest.raises(ValueError, match="unknown figure kind"):
        render(bad, tmp_path)
