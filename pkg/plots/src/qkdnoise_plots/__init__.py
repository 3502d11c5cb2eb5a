"""Render sweep CSVs (mean curve plus min-max envelope) into figures.

This package only reads the CSV contract of the qkdnoise CLI; it never
imports the simulator.
"""

from .render import FigureSpec, PlotError, SweepSeries, load_series, render

__all__ = ["FigureSpec", "PlotError", "SweepSeries", "load_series", "render"]

__version__ = "0.1.0"
