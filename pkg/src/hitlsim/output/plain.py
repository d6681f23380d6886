"""Plain text report formatter."""

from hitlsim.output.base import OutputFormatter, Report, ReportFormat, format_value


class PlainFormatter(OutputFormatter):
    """Two-column text tables, one per section.

    Used for table output when colour is off (``HITLSIM_NO_COLOR``) and
    for piping to other tools.
    """

    @property
    def format_type(self) -> ReportFormat:
        return ReportFormat.TABLE

    def format(self, report: Report) -> str:
        lines: list[str] = [report.title, "=" * len(report.title)]
        for section in report.sections:
            lines.append("")
            lines.append(section.title)
            lines.append("-" * len(section.title))
            if not section.rows:
                continue
            width = max(len(row.label) for row in section.rows)
            for row in section.rows:
                lines.append(f"{row.label.ljust(width)}  {format_value(row.value)}")
        return "\n".join(lines)
