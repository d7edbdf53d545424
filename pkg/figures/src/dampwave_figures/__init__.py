"""Rendering for dampwave run outputs: figure views and diagnostics."""

__version__ = "0.1.0"

from .gridio import SchemaError, read_grid, read_metrics_csv, spacetime_axes
from .render_diagnostics import render_diagnostics
from .render_view import FigureSpec, default_spec, render_view

__all__ = [
    "__version__",
    "SchemaError",
    "read_grid",
    "read_metrics_csv",
    "spacetime_axes",
    "render_diagnostics",
    "FigureSpec",
    "default_spec",
    "render_view",
]
