"""Figure rendering for sweep result CSV files."""

from .render import (FIGURES, REQUIRED_COLUMNS, DataError, RenderSummary,
                     SchemaError, load_series, render)

__version__ = "0.1.0"

__all__ = [
    "FIGURES",
    "REQUIRED_COLUMNS",
    "DataError",
    "RenderSummary",
    "SchemaError",
    "load_series",
    "render",
]
