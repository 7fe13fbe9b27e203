"""Tests for the command line interface."""

import json
import logging

from unittest.mock import patch

import pytest

from tuning_lab.__main__ import create_parser, main


@pytest.fixture(autouse=True)
def restore_logging():
    """Undo the root logger changes made by main()."""
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


def cli(*args):
    return main([*args, "--log-format", "text", "--log-level", "WARNING"])


class TestParser:
    """Test create_parser."""

    def test_tune_options(self):
        """Test tune accepts strategy and skips validation on request."""
        args = create_parser().parse_args(
            ["tune", "--config", "c.yaml", "--strategy", "2", "--no-validate"]
        )

        assert args.strategy == 2
        assert args.no_validate is True
        assert args.seed is None

    def test_no_command(self):
        """Test a missing subcommand is a usage error."""
        with pytest.raises(SystemExit) as exc_info:
            main([])

        assert exc_info.value.code == 1

    def test_bad_strategy(self):
        """Test strategies other than 1 and 2 are rejected."""
        with pytest.raises(SystemExit) as exc_info:
            main(["tune", "--config", "c.yaml", "--strategy", "3"])

        assert exc_info.value.code == 1


class TestRunCommand:
    """Test the run subcommand."""

    def test_success(self, campaign_file, temp_dir, capsys):
        """Test artifacts are written and the exit code is 0."""
        code = cli("run", "--config", str(campaign_file()))

        assert code == 0
        assert (temp_dir / "out" / "trace.csv").exists()
        assert (temp_dir / "out" / "utility.json").exists()
        assert "✅" in capsys.readouterr().out

    def test_seed_and_out(self, campaign_file, temp_dir):
        """Test --seed and --out override the campaign file."""
        out = temp_dir / "seeded"

        code = cli(
            "run",
            "--config",
            str(campaign_file()),
            "--seed",
            "11",
            "--out",
            str(out),
        )

        assert code == 0
        payload = json.loads((out / "utility.json").read_text())
        assert payload["master_seed"] == 11

    def test_budget_not_divisible(self, campaign_file, temp_dir, capsys):
        """Test an invalid campaign exits 1 without writing output."""
        code = cli("run", "--config", str(campaign_file(budget=141)))

        assert code == 1
        assert "divisible" in capsys.readouterr().err
        assert not (temp_dir / "out").exists()

    def test_missing_config(self, temp_dir, capsys):
        """Test a missing campaign file exits 1."""
        code = cli("run", "--config", str(temp_dir / "absent.yaml"))

        assert code == 1
        assert "❌ Error" in capsys.readouterr().err

    @patch("tuning_lab.__main__.CampaignService.run")
    def test_unexpected_error(self, mock_run, campaign_file, capsys):
        """Test other failures exit 2."""
        mock_run.side_effect = RuntimeError("boom")

        code = cli("run", "--config", str(campaign_file()))

        assert code == 2
        assert "boom" in capsys.readouterr().err


class TestOracleCommand:
    """Test the oracle subcommand."""

    def test_success(self, campaign_file, temp_dir):
        """Test oracle.json is written."""
        code = cli("oracle", "--config", str(campaign_file()))

        assert code == 0
        data = json.loads((temp_dir / "out" / "oracle.json").read_text())
        assert data["indices"] == [2, 2]

    def test_limit_exceeded(self, campaign_file, capsys):
        """Test a space above the limit exits 1 naming its size."""
        code = cli("oracle", "--config", str(campaign_file(oracle_limit=10)))

        assert code == 1
        assert "25" in capsys.readouterr().err


class TestTuneCommand:
    """Test the tune subcommand."""

    def test_strategy_override(self, campaign_file, temp_dir):
        """Test --strategy selects the phased strategy."""
        code = cli(
            "tune",
            "--config",
            str(campaign_file()),
            "--strategy",
            "2",
            "--no-validate",
        )

        assert code == 0
        data = json.loads(
            (temp_dir / "out" / "pso_s2_report.json").read_text()
        )
        assert data["strategy"] == 2
        assert data["validation"] is None


class TestReportCommand:
    """Test the report subcommand."""

    def test_empty_dir(self, temp_dir, capsys):
        """Test a directory without reports exits 1."""
        code = cli("report", str(temp_dir))

        assert code == 1
        assert "no tuning reports" in capsys.readouterr().err

    def test_after_tune(self, campaign_file, temp_dir):
        """Test tune then report writes the comparison."""
        config = str(campaign_file())
        assert cli("tune", "--config", config, "--no-validate") == 0

        code = cli("report", str(temp_dir / "out"))

        assert code == 0
        assert (temp_dir / "out" / "comparison.json").exists()
