"""Figure renderers for the enttransfer sweep CSVs."""

from .render import FIGURE_IDS, FigureSpec, SchemaError, build_figure, load_rows, render

__all__ = [
    "FIGURE_IDS",
    "FigureSpec",
    "SchemaError",
    "build_figure",
    "load_rows",
    "render",
]
