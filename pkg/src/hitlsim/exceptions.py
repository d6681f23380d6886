"""Exception hierarchy for hitlsim.

Exit codes follow the CLI contract: 2 for anything the user can fix by
changing an input file, flag or config value; 1 for internal failures.
"""

from pathlib import Path


class HitlSimError(Exception):
    """Base exception for all hitlsim errors."""

    exit_code: int = 1
    user_message: str = "An error occurred"

    def __init__(
        self,
        message: str | None = None,
        *,
        user_message: str | None = None,
    ) -> None:
        super().__init__(message or self.user_message)
        if user_message:
            self.user_message = user_message


class InputError(HitlSimError):
    """Invalid user input (files, flags, configuration)."""

    exit_code = 2
    user_message = "Invalid input"


# Config Errors
class ConfigError(InputError):
    """Configuration errors."""

    user_message = "Configuration error"


class ConfigNotFoundError(ConfigError):
    """Configuration file not found."""

    user_message = "Configuration file not found"


class ConfigValidationError(ConfigError):
    """Configuration validation failed."""

    user_message = "Invalid configuration"


class InputFileNotFoundError(InputError):
    """Input file does not exist or cannot be read."""

    user_message = "File not found"


# Parse Errors
class ParseError(InputError):
    """A file could not be parsed.

    Attributes:
        path: File the error came from, when known.
        line: 1-based line number, when known.
        column: 1-based column (or field position), when known.
    """

    user_message = "Parse error"

    def __init__(
        self,
        message: str | None = None,
        *,
        path: Path | str | None = None,
        line: int | None = None,
        column: int | None = None,
        user_message: str | None = None,
    ) -> None:
        self.path = Path(path) if path is not None else None
        self.line = line
        self.column = column
        detail = message or self.user_message
        super().__init__(self._locate(detail), user_message=user_message)

    def _locate(self, detail: str) -> str:
        where: list[str] = []
        if self.path is not None:
            where.append(str(self.path))
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.column is not None:
            where.append(f"column {self.column}")
        return f"{', '.join(where)}: {detail}" if where else detail


class IntervalParseError(ParseError):
    """Malformed interval file."""

    user_message = "Malformed interval file"


class FrameParseError(ParseError):
    """Malformed frame file."""

    user_message = "Malformed frame file"


class LogParseError(ParseError):
    """Malformed event log file."""

    user_message = "Malformed event log"


class SurveyParseError(ParseError):
    """Malformed survey file."""

    user_message = "Malformed survey file"


# Domain validation errors
class InvalidSeriesError(InputError):
    """Frame series contains values other than 0 and 1."""

    user_message = "Frame flags must be 0 or 1"


class InvalidIntervalError(InputError):
    """Interval bounds are negative or inverted."""

    user_message = "Invalid event interval"


class InvalidLogError(InputError):
    """Event log violates ordering or causality invariants.

    Attributes:
        index: 0-based position of the offending entry, when known.
    """

    user_message = "Invalid event log"

    def __init__(
        self,
        message: str | None = None,
        *,
        index: int | None = None,
        user_message: str | None = None,
    ) -> None:
        self.index = index
        super().__init__(message, user_message=user_message)


class SurveyValidationError(InputError):
    """Survey scores violate the declared scale or shape.

    Attributes:
        row: 1-based respondent row, when the error is cell-specific.
        column: 1-based item column, when the error is cell-specific.
    """

    user_message = "Invalid survey responses"

    def __init__(
        self,
        message: str | None = None,
        *,
        row: int | None = None,
        column: int | None = None,
        user_message: str | None = None,
    ) -> None:
        self.row = row
        self.column = column
        super().__init__(message, user_message=user_message)


class ReliabilityError(InputError):
    """Reliability coefficient cannot be computed."""

    user_message = "no variance in total scores"


class InvalidArgumentError(InputError):
    """Invalid argument provided."""

    user_message = "Invalid argument"


# Simulation Errors
class SimulationError(HitlSimError):
    """Simulation state machine errors."""

    user_message = "Simulation error"


class UnknownEventError(SimulationError):
    """Event id was never detected in this run."""

    user_message = "Unknown event"


class QueuePreconditionError(SimulationError):
    """Operator tried to label an event that is not in their queue."""

    user_message = "Event is not in the operator's queue"
