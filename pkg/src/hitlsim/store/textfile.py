"""Shared plumbing for the line-delimited file formats."""

import re
from pathlib import Path

from hitlsim.exceptions import InputFileNotFoundError, ParseError

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
NON_NEGATIVE_INT = re.compile(r"0|[1-9][0-9]*")
SIGNED_INT = re.compile(r"-?(?:0|[1-9][0-9]*)")
POSITIVE_NUMBER = re.compile(r"(?:0|[1-9][0-9]*)(?:\.[0-9]+)?(?:e[+-]?[0-9]+)?")


def read_text(path: Path | str) -> str:
    """Read a UTF-8 input file.

    Raises:
        InputFileNotFoundError: If the file is missing or unreadable.
    """
    path = Path(path)
    try:
        return path.read_text(encoding="utf-8")
    except FileNotFoundError as e:
        raise InputFileNotFoundError(f"{path}: file not found") from e
    except (OSError, UnicodeDecodeError) as e:
        raise InputFileNotFoundError(f"{path}: cannot read file ({e})") from e


def write_text(path: Path | str, text: str) -> None:
    """Write canonical text: UTF-8, LF line endings."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def split_lines(
    text: str, error: type[ParseError], path: Path | str | None = None
) -> list[tuple[int, str]]:
    """Split into ``(line_number, line)`` pairs.

    A single trailing newline is allowed; blank lines and carriage returns
    are not.
    """
    if not text:
        return []
    lines = text.split("\n")
    if lines[-1] == "":
        lines.pop()
    numbered = []
    for number, line in enumerate(lines, start=1):
        if "\r" in line:
            raise error("carriage return in line", path=path, line=number)
        if not line:
            raise error("blank line", path=path, line=number)
        numbered.append((number, line))
    return numbered


def join_lines(lines: list[str]) -> str:
    return "".join(f"{line}\n" for line in lines)
