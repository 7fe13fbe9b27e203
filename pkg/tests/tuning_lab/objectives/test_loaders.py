"""Tests for the table surrogate CSV codec."""

import pytest

from tuning_lab.exceptions import (
    MissingEntryError,
    ObjectiveError,
    TableFormatError,
)
from tuning_lab.objectives import (
    TableCSVLoader,
    evaluate,
    load_table,
    save_table,
)
from tuning_lab.space import DiscreteSpace


@pytest.fixture
def write_csv(tmp_path):
    def _write(text, name="table.csv"):
        path = tmp_path / name
        path.write_text(text)
        return path

    return _write


class TestTableCSVLoader:
    """Test TableCSVLoader."""

    def test_load_infers_space(self, write_csv):
        """Test the space is inferred from the largest indices."""
        path = write_csv("i1,i2,fitness\n0,0,1.5\n0,1,2\n1,0,3\n1,1,-4\n")

        spec = load_table(path)

        assert spec.space.counts == (2, 2)
        assert evaluate(spec, (1, 1)).fitness == -4.0

    def test_load_with_space(self, write_csv):
        """Test loading against a given space."""
        path = write_csv("i1,fitness\n0,1.0\n1,2.0\n2,3.0\n")
        space = DiscreteSpace.uniform(1, 0.0, 1.0, 3)

        spec = TableCSVLoader(space).load(path)

        assert spec.space is space

    def test_missing_file(self, tmp_path):
        """Test a missing file raises FileNotFoundError."""
        with pytest.raises(FileNotFoundError):
            load_table(tmp_path / "absent.csv")

    def test_bad_header(self, write_csv):
        """Test a malformed header is reported on line 1."""
        path = write_csv("a,b,fitness\n0,0,1\n")

        with pytest.raises(TableFormatError) as exc_info:
            load_table(path)

        assert exc_info.value.line == 1

    def test_bad_fitness_line_number(self, write_csv):
        """Test the offending line is reported."""
        path = write_csv("i1,i2,fitness\n0,0,1.0\n0,1,abc\n")

        with pytest.raises(TableFormatError, match="line 3") as exc_info:
            load_table(path)

        assert exc_info.value.line == 3

    def test_duplicate_row(self, write_csv):
        """Test duplicate index vectors are rejected."""
        path = write_csv("i1,fitness\n0,1.0\n1,2.0\n0,3.0\n")

        with pytest.raises(TableFormatError, match="duplicate") as exc_info:
            load_table(path)

        assert exc_info.value.line == 4

    def test_wrong_width(self, write_csv):
        """Test rows with the wrong number of columns."""
        path = write_csv("i1,fitness\n0,1.0,7\n")

        with pytest.raises(TableFormatError, match="columns"):
            load_table(path)

    def test_outside_space(self, write_csv):
        """Test rows outside the given space are rejected."""
        path = write_csv("i1,fitness\n0,1.0\n5,2.0\n")
        space = DiscreteSpace.uniform(1, 0.0, 1.0, 2)

        with pytest.raises(TableFormatError, match="outside"):
            load_table(path, space)

    def test_infeasible_needs_penalty(self, write_csv):
        """Test infeasible rows need a penalty magnitude."""
        path = write_csv("i1,fitness,feasible\n0,1.0,1\n1,2.0,0\n")

        with pytest.raises(ObjectiveError, match="penalty"):
            load_table(path)

    def test_infeasible_penalized(self, write_csv):
        """Test infeasible rows are penalized."""
        path = write_csv("i1,fitness,feasible\n0,1.0,1\n1,2.0,0\n")

        spec = load_table(path, penalty_magnitude=10.0)
        result = evaluate(spec, (1,))

        assert result.fitness == 12.0
        assert not result.feasible


class TestSaveTable:
    """Test save_table."""

    def test_save_then_load(self, tmp_path, table3_spec):
        """Test a saved table loads back with the same entries."""
        path = save_table(table3_spec, tmp_path / "out" / "t.csv")

        loaded = load_table(path)

        assert dict(loaded.table) == dict(table3_spec.table)
        assert path.read_text().splitlines()[0] == "i1,i2,fitness"

    def test_literals_round_trip(self, write_csv, tmp_path):
        """Test saving a loaded file reproduces its bytes, rows sorted."""
        text = (
            "i1,i2,fitness,feasible\n"
            "1,1,1e-3,1\n"
            "0,0,3,1\n"
            "1,0,0.30000000000000004,0\n"
            "0,1,-2.50,1\n"
        )
        spec = load_table(write_csv(text), penalty_magnitude=10.0)

        path = save_table(spec, tmp_path / "saved.csv")

        lines = text.splitlines()
        assert path.read_text().splitlines() == [lines[0]] + sorted(
            lines[1:]
        )

    def test_rejects_benchmarks(self, tmp_path, ackley_spec):
        """Test only table surrogates are saved."""
        with pytest.raises(ObjectiveError):
            save_table(ackley_spec, tmp_path / "t.csv")


class TestTableCoverage:
    """Test total and partial tables."""

    def test_total_table(self, write_csv):
        """Test a full [3,3] table evaluates everywhere."""
        rows = "".join(
            f"{i},{j},{i + j}\n" for i in range(3) for j in range(3)
        )
        spec = load_table(write_csv("i1,i2,fitness\n" + rows))

        for iv in spec.space.iter_indices():
            assert evaluate(spec, iv).fitness == float(sum(iv))

    def test_hole(self, write_csv):
        """Test a missing row loads but fails on evaluation."""
        rows = "".join(
            f"{i},{j},{i + j}\n"
            for i in range(3)
            for j in range(3)
            if (i, j) != (1, 1)
        )
        space = DiscreteSpace.uniform(2, 0.0, 1.0, 3)
        spec = load_table(write_csv("i1,i2,fitness\n" + rows), space)

        with pytest.raises(MissingEntryError):
            evaluate(spec, (1, 1))
