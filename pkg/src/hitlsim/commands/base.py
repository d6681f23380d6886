"""Base command pattern implementation.

Every subcommand is a BaseCommand that receives a CommandContext (config,
formatter, working directory) and returns a CommandResult carrying a Report
and the exit code the CLI should use.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from hitlsim.config.schema import HitlSimConfig
from hitlsim.exceptions import HitlSimError
from hitlsim.output.base import OutputFormatter, Report
from hitlsim.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass
class CommandContext:
    """Context object passed to commands for dependency injection.

    Attributes:
        config: The application configuration.
        formatter: The report formatter.
        working_dir: Base directory for relative paths.
    """

    config: HitlSimConfig
    formatter: OutputFormatter
    working_dir: Path = field(default_factory=Path.cwd)

    def resolve(self, path: Path | str) -> Path:
        """Resolve a user path against the working directory."""
        path = Path(path)
        return path if path.is_absolute() else self.working_dir / path


@dataclass
class CommandResult:
    """Result of a command execution.

    Attributes:
        success: Whether the command succeeded.
        data: The report to print, if any.
        error: Error message if the command failed.
        exit_code: Process exit code for the CLI (0 on success).
        metadata: Additional data about the execution.
    """

    success: bool
    data: Report | None = None
    error: str | None = None
    exit_code: int = 0
    metadata: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def ok(cls, data: Report | None, **metadata: Any) -> "CommandResult":
        return cls(success=True, data=data, metadata=metadata)

    @classmethod
    def fail(cls, error: str, exit_code: int = 1, **metadata: Any) -> "CommandResult":
        return cls(success=False, error=error, exit_code=exit_code, metadata=metadata)

    @classmethod
    def from_error(cls, err: HitlSimError) -> "CommandResult":
        return cls.fail(str(err), exit_code=err.exit_code, error_type=type(err).__name__)


class BaseCommand(ABC):
    """Abstract base class for all hitlsim commands.

    ``execute`` does the work and may raise HitlSimError; ``run`` turns
    those errors into failed results and prints successful reports.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """The command name (used in CLI)."""

    @property
    @abstractmethod
    def description(self) -> str:
        """A short description of what the command does."""

    @property
    def aliases(self) -> list[str]:
        """Alternative names for the command."""
        return []

    @abstractmethod
    def execute(self, ctx: CommandContext, **kwargs: Any) -> CommandResult:
        """Execute the command.

        Raises:
            HitlSimError: On invalid input or a simulation failure.
        """

    def run(self, ctx: CommandContext, **kwargs: Any) -> CommandResult:
        """Execute, print the report on success, and return the result."""
        logger.debug("Running %s (%s)", self.name, self.description)
        try:
            result = self.execute(ctx, **kwargs)
        except HitlSimError as e:
            logger.debug("Command %s failed: %s", self.name, e)
            return CommandResult.from_error(e)
        if result.success and result.data is not None:
            ctx.formatter.print(result.data)
        return result

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(name={self.name!r})"
