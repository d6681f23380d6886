"""Report rendering (JSON, rich tables, plain tables).

Usage:
    from hitlsim.output import Report, render_report

    report = Report("Detection")
    report.add_section("detection", "Event-based detection", [("tp", "TP_detection", 30)])
    print(render_report(report, "table", color=False))
"""

from typing import TextIO

from hitlsim.output.base import (
    NOT_AVAILABLE,
    OutputFormatter,
    Report,
    ReportFormat,
    ReportRow,
    ReportSection,
    format_value,
    round_significant,
)
from hitlsim.output.json_fmt import JSONFormatter
from hitlsim.output.plain import PlainFormatter
from hitlsim.output.rich_fmt import RichFormatter

__all__ = [
    "NOT_AVAILABLE",
    "JSONFormatter",
    "OutputFormatter",
    "PlainFormatter",
    "Report",
    "ReportFormat",
    "ReportRow",
    "ReportSection",
    "RichFormatter",
    "format_value",
    "get_formatter",
    "render_report",
    "round_significant",
]


def get_formatter(
    format_type: ReportFormat | str,
    *,
    color: bool = True,
    stream: TextIO | None = None,
) -> OutputFormatter:
    """Pick a formatter; tables are plain text when colour is off.

    Raises:
        ValueError: If format_type is not recognized.
    """
    if isinstance(format_type, str):
        format_type = ReportFormat(format_type.lower())
    if format_type == ReportFormat.JSON:
        return JSONFormatter(stream)
    if color:
        return RichFormatter(stream)
    return PlainFormatter(stream)


def render_report(
    report: Report, format_type: ReportFormat | str = ReportFormat.TABLE, *, color: bool = False
) -> str:
    """Render a report to text; equal reports give identical output."""
    return get_formatter(format_type, color=color).format(report)
