"""Plotting companion for the AMM loss toolkit.

Consumes only the CSV and JSON files the ``ammloss`` command emits and
renders the six standard figures.  It never imports the simulation
package, so any tool producing files with the same schemas can feed it.
"""

from .figures import FIGURE_NAMES, FigureSpec, Series, preset_figures, render
from .parse import FigureInputError, read_report, read_table

__version__ = "1.0.0"

__all__ = [
    "FIGURE_NAMES",
    "FigureInputError",
    "FigureSpec",
    "Series",
    "preset_figures",
    "read_report",
    "read_table",
    "render",
    "__version__",
]
