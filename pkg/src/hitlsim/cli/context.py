"""Context factory for creating CommandContext from CLI options."""

from pathlib import Path

from hitlsim.cli.options import get_report_format
from hitlsim.commands.base import CommandContext
from hitlsim.config import get_config
from hitlsim.output import get_formatter
from hitlsim.output.base import ReportFormat


def create_context(*, format_choice: ReportFormat | None = None) -> CommandContext:
    """Create a CommandContext from CLI options.

    Tables render with rich styling unless colour is disabled in the config
    or through ``HITLSIM_NO_COLOR``.

    Raises:
        ConfigError: If the configuration file is invalid.
    """
    config = get_config()
    report_format = get_report_format(format_choice, config.output.default_format)
    formatter = get_formatter(report_format, color=config.output.color)

    return CommandContext(config=config, formatter=formatter, working_dir=Path.cwd())
