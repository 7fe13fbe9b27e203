"""Atomic JSON and CSV output."""

import json
import logging
from pathlib import Path
from typing import Any

import pandas as pd

from ..files import atomic_write_text
from ..optimizers import RunTrace

logger = logging.getLogger(__name__)

TRACE_COLUMNS = ["config_index", "run_index", "iteration", "best_fitness"]


def write_json(path: str | Path, data: dict[str, Any]) -> Path:
    """Write ``data`` as indented JSON (no NaN or Infinity)."""
    path = Path(path)
    text = json.dumps(data, indent=2, allow_nan=False, ensure_ascii=False)
    atomic_write_text(path, text + "\n")
    logger.debug(f"Wrote {path}")
    return path


def read_json(path: str | Path) -> dict[str, Any]:
    """Read a JSON object.

    Raises:
        FileNotFoundError: If the file does not exist
        ValueError: If the file is not a JSON object
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"File not found: {path}")
    with open(path, "r", encoding="utf-8") as f:
        data = json.load(f)
    if not isinstance(data, dict):
        raise ValueError(f"{path} does not contain a JSON object")
    return data


def write_frame(path: str | Path, frame: pd.DataFrame) -> Path:
    """Write a DataFrame as CSV with shortest round-trip floats."""
    path = Path(path)
    atomic_write_text(path, frame.to_csv(index=False, lineterminator="\n"))
    logger.debug(f"Wrote {path} ({len(frame)} rows)")
    return path


def trace_frame(
    traces: list[RunTrace], config_index: int = 0
) -> pd.DataFrame:
    """Long-format trace table, one row per run and iteration."""
    rows = [
        (config_index, run_index, iteration, best)
        for run_index, trace in enumerate(traces)
        for iteration, best in enumerate(trace.best)
    ]
    return pd.DataFrame(rows, columns=TRACE_COLUMNS)
