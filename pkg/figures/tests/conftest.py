import subprocess
import sys

import pytest

# every regeneration below uses the producing command's figure presets
# (or the one documented flag override) so the dataset matches what the
# README tells a user to run
_DATASET_COMMANDS = (
    ("path", "--figure", "1"),
    ("ensemble", "--figure", "4-5"),
    ("density", "--t-max", "5000", "--points", "401"),
    ("density", "--figure", "3"),
    ("analytic", "--figure", "il-curve"),
)


@pytest.fixture(scope="session")
def dataset(tmp_path_factory):
    """Fresh data directory produced by the simulation CLI."""
    data = tmp_path_factory.mktemp("figure_data")
    for cmd in _DATASET_COMMANDS:
        subprocess.run(
            [sys.executable, "-m", "ammloss.cli", *cmd, "--out", str(data)],
            check=True,
            capture_output=True,
        )
    return data
