"""Report model and formatter base class."""

import math
import sys
from abc import ABC, abstractmethod
from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum
from typing import TextIO

NOT_AVAILABLE = "n/a"
SIGNIFICANT_DIGITS = 6

Value = float | int | str | bool | None


class ReportFormat(str, Enum):
    """Supported report formats."""

    JSON = "json"
    TABLE = "table"


@dataclass(frozen=True)
class ReportRow:
    """One metric: a stable machine key, a human label and its value."""

    key: str
    label: str
    value: Value


@dataclass(frozen=True)
class ReportSection:
    name: str
    title: str
    rows: tuple[ReportRow, ...] = ()

    def as_dict(self) -> dict[str, Value]:
        return {row.key: row.value for row in self.rows}


@dataclass
class Report:
    """Ordered sections of metric rows.

    Absent values are None; formatters render them as ``null`` (JSON) or
    ``n/a`` (tables).
    """

    title: str
    sections: list[ReportSection] = field(default_factory=list)

    def add_section(
        self, name: str, title: str, rows: Iterable[tuple[str, str, Value]]
    ) -> ReportSection:
        section = ReportSection(
            name, title, tuple(ReportRow(key, label, value) for key, label, value in rows)
        )
        self.sections.append(section)
        return section

    def section(self, name: str) -> ReportSection:
        for section in self.sections:
            if section.name == name:
                return section
        raise KeyError(name)

    def as_dict(self) -> dict[str, dict[str, Value]]:
        return {section.name: section.as_dict() for section in self.sections}


def round_significant(value: float, digits: int = SIGNIFICANT_DIGITS) -> float:
    """Round to a fixed number of significant digits."""
    if value == 0 or not math.isfinite(value):
        return value
    return float(f"{value:.{digits}g}")


def format_value(value: Value) -> str:
    """Render a single value for tables."""
    if value is None:
        return NOT_AVAILABLE
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return f"{value:.{SIGNIFICANT_DIGITS}g}"
    return str(value)


class OutputFormatter(ABC):
    """Renders a Report to text.

    ``format`` is pure so the same report always gives the same string;
    ``print`` writes to the output stream.
    """

    def __init__(self, stream: TextIO | None = None) -> None:
        self._stream = stream or sys.stdout

    @property
    def stream(self) -> TextIO:
        return self._stream

    @property
    @abstractmethod
    def format_type(self) -> ReportFormat:
        """The format this formatter produces."""

    @abstractmethod
    def format(self, report: Report) -> str:
        """Render a report as text."""

    def print(self, report: Report) -> None:
        print(self.format(report), file=self._stream)
