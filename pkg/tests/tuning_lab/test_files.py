"""Tests for atomic file output."""

from unittest.mock import patch

import pytest

from tuning_lab.files import atomic_write_bytes, atomic_write_text


class TestAtomicWrite:
    """Test atomic_write_bytes and atomic_write_text."""

    def test_creates_parents(self, temp_dir):
        """Test missing directories are created."""
        path = atomic_write_text(temp_dir / "a" / "b" / "c.txt", "hello")

        assert path.read_text() == "hello"

    def test_replaces(self, temp_dir):
        """Test existing content is replaced."""
        target = temp_dir / "x.bin"
        atomic_write_bytes(target, b"old")

        atomic_write_bytes(target, b"new")

        assert target.read_bytes() == b"new"
        assert [p.name for p in temp_dir.iterdir()] == ["x.bin"]

    def test_failure_keeps_previous(self, temp_dir):
        """Test a failed write leaves the old content and no temp file."""
        target = temp_dir / "keep.txt"
        atomic_write_text(target, "before")

        with patch("tuning_lab.files.os.replace", side_effect=OSError):
            with pytest.raises(OSError):
                atomic_write_text(target, "after")

        assert target.read_text() == "before"
        assert [p.name for p in temp_dir.iterdir()] == ["keep.txt"]
