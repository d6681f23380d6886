"""JSON report formatter."""

import json
from typing import Any, TextIO

from hitlsim.output.base import (
    OutputFormatter,
    Report,
    ReportFormat,
    Value,
    round_significant,
)


class JSONFormatter(OutputFormatter):
    """Machine-stable JSON: sorted keys, floats to 6 significant digits.

    The payload holds the report title plus one object per section.
    """

    def __init__(self, stream: TextIO | None = None, indent: int | None = 2) -> None:
        super().__init__(stream)
        self._indent = indent

    @property
    def format_type(self) -> ReportFormat:
        return ReportFormat.JSON

    @staticmethod
    def _encode(value: Value) -> Value:
        if isinstance(value, float) and not isinstance(value, bool):
            return round_significant(value)
        return value

    def to_payload(self, report: Report) -> dict[str, Any]:
        payload: dict[str, Any] = {"title": report.title}
        for name, rows in report.as_dict().items():
            payload[name] = {key: self._encode(value) for key, value in rows.items()}
        return payload

    def format(self, report: Report) -> str:
        return json.dumps(
            self.to_payload(report),
            indent=self._indent,
            sort_keys=True,
            ensure_ascii=False,
            allow_nan=False,
        )
