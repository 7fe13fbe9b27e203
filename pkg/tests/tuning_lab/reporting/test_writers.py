"""Tests for JSON and CSV writers."""

import math

import pandas as pd
import pytest

from tuning_lab.optimizers import RunTrace
from tuning_lab.reporting import (
    TRACE_COLUMNS,
    read_json,
    trace_frame,
    write_frame,
    write_json,
)


class TestJson:
    """Test write_json and read_json."""

    def test_write_read(self, temp_dir):
        """Test written objects read back equal."""
        data = {"x": [1, 2.5], "y": None}
        path = write_json(temp_dir / "a" / "b.json", data)

        assert read_json(path) == data
        assert path.read_text().endswith("\n")

    def test_no_temporary_files_left(self, temp_dir):
        """Test the atomic write leaves only the target."""
        write_json(temp_dir / "r.json", {"a": 1})

        assert [p.name for p in temp_dir.iterdir()] == ["r.json"]

    def test_rejects_nan(self, temp_dir):
        """Test NaN is not written."""
        with pytest.raises(ValueError):
            write_json(temp_dir / "bad.json", {"x": math.nan})

        assert not (temp_dir / "bad.json").exists()

    def test_read_missing(self, temp_dir):
        """Test reading a missing file."""
        with pytest.raises(FileNotFoundError):
            read_json(temp_dir / "absent.json")

    def test_read_not_object(self, temp_dir):
        """Test reading a JSON list."""
        (temp_dir / "list.json").write_text("[1, 2]")

        with pytest.raises(ValueError, match="JSON object"):
            read_json(temp_dir / "list.json")


class TestFrames:
    """Test trace_frame and write_frame."""

    def test_trace_frame(self):
        """Test one row per run and iteration."""
        traces = [
            RunTrace(best=(3.0, 2.0, 1.0), best_solution=(0,), evaluations=6),
            RunTrace(best=(5.0, 5.0, 4.0), best_solution=(1,), evaluations=6),
        ]

        frame = trace_frame(traces, config_index=7)

        assert list(frame.columns) == TRACE_COLUMNS
        assert len(frame) == 6
        assert frame["config_index"].unique().tolist() == [7]
        assert frame.iloc[4].tolist() == [7, 1, 1, 5.0]

    def test_write_frame(self, temp_dir):
        """Test CSV output uses shortest float text and LF endings."""
        frame = pd.DataFrame({"a": [1, 2], "b": [0.1, 1 / 3]})

        path = write_frame(temp_dir / "f.csv", frame)

        text = path.read_bytes().decode()
        assert "\r" not in text
        assert text.splitlines() == [
            "a,b",
            "1,0.1",
            f"2,{1 / 3!r}",
        ]
