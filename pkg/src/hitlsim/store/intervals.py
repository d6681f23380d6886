"""Interval files: one ``start_frame,end_frame`` record per line.

An optional header line ``start_frame,end_frame`` may come first, and lines
starting with ``#`` are comments. Canonical output has the header and the
intervals sorted by (start, end).
"""

import re
from collections.abc import Iterable
from pathlib import Path

from hitlsim.events.frames import EventInterval, canonical_order
from hitlsim.exceptions import IntervalParseError, InvalidIntervalError
from hitlsim.store.textfile import join_lines, read_text, split_lines, write_text

HEADER = "start_frame,end_frame"

_RECORD = re.compile(r"(-?(?:0|[1-9][0-9]*)),(-?(?:0|[1-9][0-9]*))")


def parse_intervals(text: str, path: Path | str | None = None) -> list[EventInterval]:
    """Parse interval text into canonical order.

    Raises:
        IntervalParseError: On a malformed, negative or inverted record,
            naming its line.
    """
    intervals: list[EventInterval] = []
    header_allowed = True
    for number, line in split_lines(text, IntervalParseError, path):
        if line.startswith("#"):
            continue
        if line == HEADER and header_allowed:
            header_allowed = False
            continue
        header_allowed = False
        match = _RECORD.fullmatch(line)
        if match is None:
            raise IntervalParseError(
                f"expected 'start_frame,end_frame', got {line!r}", path=path, line=number
            )
        try:
            intervals.append(EventInterval(int(match[1]), int(match[2])))
        except InvalidIntervalError as e:
            raise IntervalParseError(str(e), path=path, line=number) from e
    return canonical_order(intervals)


def serialize_intervals(intervals: Iterable[EventInterval]) -> str:
    rows = [f"{i.start_frame},{i.end_frame}" for i in canonical_order(list(intervals))]
    return join_lines([HEADER, *rows])


def read_intervals(path: Path | str) -> list[EventInterval]:
    return parse_intervals(read_text(path), path)


def write_intervals(path: Path | str, intervals: Iterable[EventInterval]) -> None:
    write_text(path, serialize_intervals(intervals))
