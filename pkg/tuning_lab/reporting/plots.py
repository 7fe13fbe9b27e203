"""SVG rendering of curves, box plots and influence bars.

Plots only draw values handed to them; every number shown is also in
the JSON output it came from. SVG output is deterministic (fixed hash
salt, no date metadata) and keeps text as text elements.
"""

import io
import logging
from collections.abc import Mapping, Sequence
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.figure import Figure  # noqa: E402

from ..files import atomic_write_bytes  # noqa: E402
from ..metrics import FiveNumber  # noqa: E402

logger = logging.getLogger(__name__)

_SVG_SALT = "tuning-lab"
LABEL_FORMAT = "{:.6g}"


def _save(fig: Figure, path: str | Path) -> Path:
    path = Path(path)
    buffer = io.BytesIO()
    with matplotlib.rc_context(
        {"svg.hashsalt": _SVG_SALT, "svg.fonttype": "none"}
    ):
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    plt.close(fig)
    atomic_write_bytes(path, buffer.getvalue())
    logger.debug(f"Wrote {path}")
    return path


def plot_apc(
    curves: Mapping[str, Sequence[float]],
    path: str | Path,
    title: str = "Average performance curve",
) -> Path:
    """Overlay average performance curves.

    Args:
        curves: Label to APC points (entry t = iteration t)
        path: Output SVG path
        title: Figure title

    Returns:
        Path written
    """
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for label, points in curves.items():
        ax.plot(range(len(points)), list(points), label=label, linewidth=1.4)
    ax.set_xlabel("Iteration")
    ax.set_ylabel("Mean best fitness")
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    if len(curves) > 1:
        ax.legend(fontsize="small")
    fig.tight_layout()
    return _save(fig, path)


def plot_boxes(
    summaries: Mapping[str, FiveNumber],
    path: str | Path,
    title: str = "F_C across configurations",
    ylabel: str = "F_C",
) -> Path:
    """Draw box plots from precomputed five-number summaries.

    Whiskers span min to max, the box spans the quartiles and the line
    marks the median. Each box is annotated with its five values.
    """
    stats = [
        {
            "label": label,
            "whislo": s.min,
            "q1": s.q25,
            "med": s.median,
            "q3": s.q75,
            "whishi": s.max,
            "fliers": [],
        }
        for label, s in summaries.items()
    ]
    fig, ax = plt.subplots(figsize=(max(4.0, 1.6 * len(stats) + 2), 5))
    ax.bxp(stats, showfliers=False)
    for position, s in enumerate(summaries.values(), start=1):
        for value in s.as_tuple():
            ax.annotate(
                LABEL_FORMAT.format(value),
                (position + 0.28, value),
                fontsize=7,
                va="center",
            )
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.grid(True, axis="y", alpha=0.3)
    fig.tight_layout()
    return _save(fig, path)


def plot_influence(
    influences: Mapping[str, Mapping[str, float]],
    path: str | Path,
    title: str = "Parameter influence",
) -> Path:
    """Grouped bar chart of parameter influence per phase.

    Args:
        influences: Phase label to {parameter: influence}
        path: Output SVG path
        title: Figure title
    """
    parameters: list[str] = []
    for values in influences.values():
        parameters.extend(p for p in values if p not in parameters)

    n_phases = max(len(influences), 1)
    width = 0.8 / n_phases
    fig, ax = plt.subplots(figsize=(max(5.0, 1.2 * len(parameters) + 2), 4))
    for k, (phase, values) in enumerate(influences.items()):
        xs = [i + k * width for i in range(len(parameters))]
        heights = [values.get(p, 0.0) for p in parameters]
        ax.bar(xs, heights, width=width, label=phase)
    ax.set_xticks(
        [i + width * (n_phases - 1) / 2 for i in range(len(parameters))]
    )
    ax.set_xticklabels(parameters, rotation=20)
    ax.set_ylabel("Spread of group-mean F_C")
    ax.set_title(title)
    ax.legend(fontsize="small")
    fig.tight_layout()
    return _save(fig, path)
