"""Rich terminal report formatter."""

from io import StringIO
from typing import TextIO

from rich.console import Console, Group
from rich.markup import escape
from rich.table import Table

from hitlsim.output.base import OutputFormatter, Report, ReportFormat, format_value


class RichFormatter(OutputFormatter):
    """Styled tables using Rich.

    ``format`` captures without terminal codes at a fixed width, so the
    text is reproducible; ``print`` renders with styles to the stream.
    """

    def __init__(self, stream: TextIO | None = None, width: int = 100) -> None:
        super().__init__(stream)
        self._width = width
        self._console: Console | None = None

    @property
    def format_type(self) -> ReportFormat:
        return ReportFormat.TABLE

    def _get_console(self) -> Console:
        if self._console is None:
            self._console = Console(file=self._stream, width=self._width)
        return self._console

    def _renderable(self, report: Report) -> Group:
        tables = []
        for section in report.sections:
            table = Table(title=escape(section.title), title_justify="left", show_header=False)
            table.add_column("Metric", style="bold cyan")
            table.add_column("Value", justify="right")
            for row in section.rows:
                value = escape(format_value(row.value))
                table.add_row(
                    escape(row.label), f"[dim]{value}[/dim]" if row.value is None else value
                )
            tables.append(table)
        return Group(f"[bold]{escape(report.title)}[/bold]", *tables)

    def format(self, report: Report) -> str:
        buffer = StringIO()
        console = Console(file=buffer, width=self._width, force_terminal=False)
        console.print(self._renderable(report))
        return buffer.getvalue().rstrip()

    def print(self, report: Report) -> None:
        self._get_console().print(self._renderable(report))
