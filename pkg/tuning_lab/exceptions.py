"""Exception hierarchy shared by all tuning_lab packages."""


class TuningLabError(Exception):
    """Base class for all tuning_lab errors."""


class SpaceError(TuningLabError, ValueError):
    """Invalid search space definition or out-of-range index."""


class ObjectiveError(TuningLabError, ValueError):
    """Invalid objective definition or evaluation request."""


class TableFormatError(ObjectiveError):
    """Malformed table surrogate file.

    Attributes:
        line: 1-based line number of the offending row
    """

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class MissingEntryError(ObjectiveError, KeyError):
    """Table surrogate has no entry for the requested index vector."""

    def __init__(self, indices: tuple[int, ...]):
        super().__init__(f"table has no entry for index vector {indices}")
        self.indices = indices

    def __str__(self) -> str:
        return str(self.args[0])


class OracleLimitError(ObjectiveError):
    """Exhaustive enumeration refused because the space is too large."""

    def __init__(self, cardinality: int, limit: int):
        super().__init__(
            f"space cardinality {cardinality} exceeds the enumeration "
            f"limit {limit}"
        )
        self.cardinality = cardinality
        self.limit = limit


class MetricError(TuningLabError, ValueError):
    """Invalid input to a utility metric."""


class TuningError(TuningLabError, RuntimeError):
    """Failure while assessing or tuning configurations."""


class CampaignConfigError(TuningLabError, ValueError):
    """Invalid campaign configuration file."""
