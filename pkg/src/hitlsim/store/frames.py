"""Frame files.

Two record layouts, both optionally preceded by ``frame_rate = <number>``:

- compact: a single line of ``0``/``1`` characters (canonical);
- indexed: ``frame_index,flag`` per line, indices contiguous from 0, with an
  optional ``frame_index,flag`` header.
"""

import math
import re
from pathlib import Path

from hitlsim.events.frames import FrameSeries
from hitlsim.exceptions import FrameParseError
from hitlsim.store.textfile import (
    NON_NEGATIVE_INT,
    POSITIVE_NUMBER,
    join_lines,
    read_text,
    split_lines,
    write_text,
)

INDEXED_HEADER = "frame_index,flag"

_FRAME_RATE = re.compile(rf"frame_rate = ({POSITIVE_NUMBER.pattern})")
_BITS = re.compile(r"[01]+")
_INDEXED = re.compile(rf"({NON_NEGATIVE_INT.pattern}),([01])")


def parse_frames(text: str, path: Path | str | None = None) -> FrameSeries:
    """Parse either layout.

    Raises:
        FrameParseError: On a bad flag, a gap in indices or a bad frame rate,
            naming the line.
    """
    lines = split_lines(text, FrameParseError, path)
    frame_rate: float | None = None
    if lines and lines[0][1].startswith("frame_rate"):
        number, line = lines.pop(0)
        match = _FRAME_RATE.fullmatch(line)
        frame_rate = float(match[1]) if match else None
        if frame_rate is None or not math.isfinite(frame_rate) or frame_rate <= 0:
            raise FrameParseError(
                f"expected 'frame_rate = <positive number>', got {line!r}",
                path=path,
                line=number,
            )

    if not lines:
        return FrameSeries((), frame_rate)
    if "," in lines[0][1]:
        return FrameSeries(_parse_indexed(lines, path), frame_rate)

    if len(lines) > 1:
        raise FrameParseError(
            "compact frame files hold a single line of flags", path=path, line=lines[1][0]
        )
    number, bits = lines[0]
    if _BITS.fullmatch(bits) is None:
        bad = next(i for i, ch in enumerate(bits) if ch not in "01")
        raise FrameParseError(
            f"flag {bits[bad]!r} is not 0 or 1", path=path, line=number, column=bad + 1
        )
    return FrameSeries(tuple(int(ch) for ch in bits), frame_rate)


def _parse_indexed(lines: list[tuple[int, str]], path: Path | str | None) -> tuple[int, ...]:
    if lines[0][1] == INDEXED_HEADER:
        lines = lines[1:]
    flags: list[int] = []
    for number, line in lines:
        match = _INDEXED.fullmatch(line)
        if match is None:
            raise FrameParseError(
                f"expected 'frame_index,flag' with flag 0 or 1, got {line!r}",
                path=path,
                line=number,
            )
        if int(match[1]) != len(flags):
            raise FrameParseError(
                f"frame index {match[1]} out of sequence (expected {len(flags)})",
                path=path,
                line=number,
            )
        flags.append(int(match[2]))
    return tuple(flags)


def serialize_frames(series: FrameSeries, *, compact: bool = True) -> str:
    lines: list[str] = []
    if series.frame_rate is not None:
        lines.append(f"frame_rate = {series.frame_rate!r}")
    if compact:
        if len(series):
            lines.append("".join(str(v) for v in series.values))
    else:
        lines.append(INDEXED_HEADER)
        lines.extend(f"{i},{v}" for i, v in enumerate(series.values))
    return join_lines(lines)


def read_frames(path: Path | str) -> FrameSeries:
    return parse_frames(read_text(path), path)


def write_frames(path: Path | str, series: FrameSeries, *, compact: bool = True) -> None:
    write_text(path, serialize_frames(series, compact=compact))
