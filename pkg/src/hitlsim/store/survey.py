"""Survey files.

A ``key = value`` preamble declares the scale and reverse-coded items,
followed by a CSV-style table::

    scale_min = 1
    scale_max = 7
    reverse_coded = q2
    respondent,q1,q2,q3
    alice,5,3,6

``reverse_coded`` may be omitted when no item is reversed. Item and
respondent names are identifiers.
"""

import re
from pathlib import Path

from hitlsim.exceptions import SurveyParseError
from hitlsim.metrics.trust import SurveyResponseSet
from hitlsim.store.textfile import (
    IDENTIFIER,
    SIGNED_INT,
    join_lines,
    read_text,
    split_lines,
    write_text,
)

RESPONDENT_COLUMN = "respondent"

_SETTING = re.compile(r"([a-z_]+) = (.*)")
_KNOWN_SETTINGS = ("scale_min", "scale_max", "reverse_coded")


def _identifiers(value: str, number: int, path: Path | str | None) -> list[str]:
    names = value.split(",")
    for position, name in enumerate(names, start=1):
        if IDENTIFIER.fullmatch(name) is None:
            raise SurveyParseError(
                f"{name!r} is not a valid name", path=path, line=number, column=position
            )
    return names


def parse_survey(text: str, path: Path | str | None = None) -> SurveyResponseSet:
    """Parse a survey file.

    Raises:
        SurveyParseError: On a malformed preamble, header or cell.
        SurveyValidationError: On an out-of-scale score (row and column of
            the cell).
    """
    lines = split_lines(text, SurveyParseError, path)
    settings: dict[str, str] = {}
    cursor = 0
    while cursor < len(lines) and not lines[cursor][1].startswith(RESPONDENT_COLUMN):
        number, line = lines[cursor]
        match = _SETTING.fullmatch(line)
        if match is None or match[1] not in _KNOWN_SETTINGS:
            raise SurveyParseError(
                f"expected 'scale_min', 'scale_max' or 'reverse_coded' setting, got {line!r}",
                path=path,
                line=number,
            )
        if match[1] in settings:
            raise SurveyParseError(f"{match[1]} set twice", path=path, line=number)
        settings[match[1]] = match[2]
        cursor += 1

    scale: dict[str, int] = {}
    for key in ("scale_min", "scale_max"):
        if key not in settings:
            raise SurveyParseError(f"missing {key} setting", path=path)
        if SIGNED_INT.fullmatch(settings[key]) is None:
            line = next(n for n, text_ in lines if text_.startswith(key))
            raise SurveyParseError(
                f"{key} must be an integer, got {settings[key]!r}", path=path, line=line
            )
        scale[key] = int(settings[key])
    reverse: list[str] = []
    if "reverse_coded" in settings:
        line = next(n for n, text_ in lines if text_.startswith("reverse_coded"))
        reverse = _identifiers(settings["reverse_coded"], line, path)

    if cursor >= len(lines):
        raise SurveyParseError("missing 'respondent,<items>' header", path=path)
    number, header = lines[cursor]
    columns = header.split(",")
    if columns[0] != RESPONDENT_COLUMN or len(columns) < 2:
        raise SurveyParseError(
            "header must be 'respondent,<item>,...'", path=path, line=number
        )
    items = _identifiers(",".join(columns[1:]), number, path)

    respondents: list[str] = []
    scores: list[tuple[int, ...]] = []
    for number, line in lines[cursor + 1 :]:
        cells = line.split(",")
        if len(cells) != len(columns):
            raise SurveyParseError(
                f"expected {len(columns)} fields, got {len(cells)}",
                path=path,
                line=number,
            )
        if IDENTIFIER.fullmatch(cells[0]) is None:
            raise SurveyParseError(
                f"{cells[0]!r} is not a valid respondent name",
                path=path,
                line=number,
                column=1,
            )
        row: list[int] = []
        for position, cell in enumerate(cells[1:], start=2):
            if SIGNED_INT.fullmatch(cell) is None:
                raise SurveyParseError(
                    f"{cell!r} is not an integer score",
                    path=path,
                    line=number,
                    column=position,
                )
            row.append(int(cell))
        respondents.append(cells[0])
        scores.append(tuple(row))

    return SurveyResponseSet(
        items=tuple(items),
        scores=tuple(scores),
        scale_min=scale["scale_min"],
        scale_max=scale["scale_max"],
        reverse_coded=frozenset(reverse),
        respondents=tuple(respondents),
    )


def serialize_survey(survey: SurveyResponseSet) -> str:
    lines = [f"scale_min = {survey.scale_min}", f"scale_max = {survey.scale_max}"]
    if survey.reverse_coded:
        ordered = [item for item in survey.items if item in survey.reverse_coded]
        lines.append(f"reverse_coded = {','.join(ordered)}")
    lines.append(",".join([RESPONDENT_COLUMN, *survey.items]))
    for name, row in zip(survey.respondents, survey.scores, strict=True):
        lines.append(",".join([name, *(str(score) for score in row)]))
    return join_lines(lines)


def read_survey(path: Path | str) -> SurveyResponseSet:
    return parse_survey(read_text(path), path)


def write_survey(path: Path | str, survey: SurveyResponseSet) -> None:
    write_text(path, serialize_survey(survey))
