"""Table surrogate CSV codec."""

import csv
import io
import logging
import math
from abc import ABC, abstractmethod
from pathlib import Path

from ..exceptions import ObjectiveError, TableFormatError
from ..files import atomic_write_text
from ..space import DiscreteSpace, IndexVector, ValueGrid
from .protocols import ObjectiveKind, ObjectiveSpec, PenaltyRule
from .surrogates import table_objective

logger = logging.getLogger(__name__)

_FITNESS_COLUMN = "fitness"
_FEASIBLE_COLUMN = "feasible"


class BaseTableLoader(ABC):
    """Abstract base class for table surrogate loaders."""

    @abstractmethod
    def load(self, source: str | Path) -> ObjectiveSpec:
        """Load a table surrogate.

        Args:
            source: Path of the table file

        Returns:
            Table surrogate objective

        Raises:
            FileNotFoundError: If source file not found
            TableFormatError: If the file is malformed
        """
        pass


class TableCSVLoader(BaseTableLoader):
    """Load table surrogates from ``i1,...,ik,fitness[,feasible]`` CSV.

    Rows whose optional ``feasible`` column is 0 are collected into the
    infeasible set of the penalty rule; ``penalty_magnitude`` is then
    required.
    """

    def __init__(
        self,
        space: DiscreteSpace | None = None,
        penalty_magnitude: float | None = None,
    ):
        """Initialize table loader.

        Args:
            space: Space the indices must fit; inferred from the data if None
            penalty_magnitude: Additive penalty for rows marked infeasible
        """
        self.space = space
        self.penalty_magnitude = penalty_magnitude

    def load(self, source: str | Path) -> ObjectiveSpec:
        path = Path(source)
        if not path.exists():
            raise FileNotFoundError(f"File not found: {source}")

        logger.info(f"Loading table surrogate from {source}")

        with open(path, "r", encoding="utf-8", newline="") as f:
            reader = csv.reader(f)
            header = next(reader, None)
            n_vars, has_feasible = self._parse_header(header)
            if self.space is not None and self.space.n_vars != n_vars:
                raise ObjectiveError(
                    f"{source} has {n_vars} index columns but the space "
                    f"has {self.space.n_vars} variables"
                )
            table: dict[IndexVector, float] = {}
            literals: dict[IndexVector, str] = {}
            infeasible: set[IndexVector] = set()

            for row in reader:
                line = reader.line_num
                if not row or all(not cell.strip() for cell in row):
                    continue
                iv, fitness, feasible = self._parse_row(
                    row, line, n_vars, has_feasible
                )
                if self.space is not None and not self.space.contains(iv):
                    raise TableFormatError(
                        f"index vector {iv} outside space counts "
                        f"{self.space.counts}",
                        line,
                    )
                if iv in table:
                    raise TableFormatError(
                        f"duplicate index vector {iv}", line
                    )
                table[iv] = fitness
                literals[iv] = row[n_vars].strip()
                if not feasible:
                    infeasible.add(iv)

        space = self.space or self._infer_space(table, n_vars)

        penalty = None
        if infeasible:
            if self.penalty_magnitude is None:
                raise ObjectiveError(
                    f"{source} marks {len(infeasible)} rows infeasible but "
                    f"no penalty magnitude was configured"
                )
            penalty = PenaltyRule(
                magnitude=self.penalty_magnitude,
                infeasible=frozenset(infeasible),
            )
        elif self.penalty_magnitude is not None:
            penalty = PenaltyRule(magnitude=self.penalty_magnitude)

        logger.info(
            f"Loaded {len(table)} table entries over {space.n_vars} "
            f"variables ({len(infeasible)} infeasible)"
        )
        return table_objective(space, table, penalty, literals)

    @staticmethod
    def _parse_header(header: list[str] | None) -> tuple[int, bool]:
        if not header:
            raise TableFormatError("missing header", 1)

        columns = [c.strip() for c in header]
        has_feasible = columns[-1] == _FEASIBLE_COLUMN
        if has_feasible:
            columns = columns[:-1]
        if len(columns) < 2 or columns[-1] != _FITNESS_COLUMN:
            raise TableFormatError(
                "header must be i1,...,ik,fitness[,feasible]", 1
            )

        expected = [f"i{j}" for j in range(1, len(columns))]
        if columns[:-1] != expected:
            raise TableFormatError(
                f"index columns must be {','.join(expected)}", 1
            )
        return len(expected), has_feasible

    @staticmethod
    def _parse_row(
        row: list[str], line: int, n_vars: int, has_feasible: bool
    ) -> tuple[IndexVector, float, bool]:
        width = n_vars + 1 + int(has_feasible)
        if len(row) != width:
            raise TableFormatError(
                f"expected {width} columns, got {len(row)}", line
            )

        try:
            iv = tuple(int(cell) for cell in row[:n_vars])
        except ValueError:
            raise TableFormatError(
                f"indices must be integers: {row[:n_vars]}", line
            ) from None

        try:
            fitness = float(row[n_vars])
        except ValueError:
            raise TableFormatError(
                f"fitness is not a number: {row[n_vars]!r}", line
            ) from None
        if not math.isfinite(fitness):
            raise TableFormatError("fitness must be finite", line)

        feasible = True
        if has_feasible:
            flag = row[n_vars + 1].strip()
            if flag not in ("0", "1"):
                raise TableFormatError(
                    f"feasible must be 0 or 1, got {flag!r}", line
                )
            feasible = flag == "1"

        if any(i < 0 for i in iv):
            raise TableFormatError(f"negative index in {iv}", line)
        return iv, fitness, feasible

    @staticmethod
    def _infer_space(
        table: dict[IndexVector, float], n_vars: int
    ) -> DiscreteSpace:
        if not table:
            raise ObjectiveError("cannot infer a space from an empty table")
        maxima = [max(iv[j] for iv in table) for j in range(n_vars)]
        return DiscreteSpace(
            grids=tuple(
                ValueGrid.explicit(range(m + 1)) for m in maxima
            )
        )


def load_table(
    path: str | Path,
    space: DiscreteSpace | None = None,
    penalty_magnitude: float | None = None,
) -> ObjectiveSpec:
    """Load a table surrogate from CSV."""
    return TableCSVLoader(space, penalty_magnitude).load(path)


def save_table(spec: ObjectiveSpec, path: str | Path) -> Path:
    """Write a table surrogate as CSV, rows in lexicographic order.

    Fitness text read by load_table is written back unchanged, other
    values as shortest round-trip decimals. The ``feasible`` column is
    added when the penalty rule marks any entry.
    """
    if spec.kind is not ObjectiveKind.TABLE or spec.table is None:
        raise ObjectiveError("only table surrogates can be saved")

    path = Path(path)
    infeasible = spec.penalty.infeasible if spec.penalty else frozenset()
    header = [f"i{j}" for j in range(1, spec.space.n_vars + 1)]
    header.append(_FITNESS_COLUMN)
    if infeasible:
        header.append(_FEASIBLE_COLUMN)

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for iv in sorted(spec.table):
        row = [str(i) for i in iv] + [_fitness_text(spec, iv)]
        if infeasible:
            row.append("0" if iv in infeasible else "1")
        writer.writerow(row)
    atomic_write_text(path, buffer.getvalue())

    logger.info(f"Saved {len(spec.table)} table entries to {path}")
    return path


def _fitness_text(spec: ObjectiveSpec, iv: IndexVector) -> str:
    assert spec.table is not None
    value = spec.table[iv]
    literal = (spec.literals or {}).get(iv)
    if literal is not None and float(literal) == value:
        return literal
    return repr(value)
