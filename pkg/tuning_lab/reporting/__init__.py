"""JSON/CSV writers and SVG plots of campaign results."""

from .plots import plot_apc, plot_boxes, plot_influence
from .writers import (
    TRACE_COLUMNS,
    read_json,
    trace_frame,
    write_frame,
    write_json,
)

__all__ = [
    # Writers
    "TRACE_COLUMNS",
    "read_json",
    "trace_frame",
    "write_frame",
    "write_json",
    # Plots
    "plot_apc",
    "plot_boxes",
    "plot_influence",
]
