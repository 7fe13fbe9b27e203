"""
Pytest configuration and shared fixtures.
"""

import tempfile
from pathlib import Path

import pytest
import yaml


@pytest.fixture
def temp_dir():
    """Create temporary directory for tests."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def write_yaml(temp_dir):
    """Write a mapping as YAML into the temporary directory."""

    def _write(data: dict, name: str = "campaign.yaml") -> Path:
        path = temp_dir / name
        path.write_text(yaml.safe_dump(data, sort_keys=False))
        return path

    return _write
