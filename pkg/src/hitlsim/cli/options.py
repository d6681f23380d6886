"""Shared CLI options for hitlsim commands."""

from typing import Annotated

import typer

from hitlsim.events.frames import SmoothingMode
from hitlsim.output.base import ReportFormat

FormatOption = Annotated[
    ReportFormat | None,
    typer.Option(
        "--format",
        "-f",
        help="Report format (json, table). Defaults to config setting.",
        case_sensitive=False,
    ),
]

ModeOption = Annotated[
    SmoothingMode | None,
    typer.Option(
        "--mode",
        help="Smoothing mode (replace, set_only). Defaults to config setting.",
        case_sensitive=False,
    ),
]

IouOption = Annotated[
    float | None,
    typer.Option("--iou", help="IoU threshold (strictly exceeded to match). Default 0.5."),
]

LogLevelOption = Annotated[
    str | None,
    typer.Option(
        "--log-level",
        help="Log level (DEBUG, INFO, WARNING, ERROR). Defaults to config setting.",
    ),
]


def get_report_format(
    format_choice: ReportFormat | None, default: ReportFormat | str = ReportFormat.TABLE
) -> ReportFormat:
    """CLI choice, else the configured default."""
    if format_choice is None:
        return ReportFormat(default)
    return format_choice
