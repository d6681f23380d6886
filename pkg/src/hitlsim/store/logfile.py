"""Event log files: one compact JSON object per line.

Keys come in a fixed order: ``seq``, ``t_s``, ``kind``, then the kind's
fields as declared on its entry model. Millisecond fields (``*_ms``) are
written as decimal seconds (``*_s``) with exactly three decimals; other
floats use their shortest round-trip form. Values are never coerced;
unknown keys and kinds are rejected.
"""

import json
import math
from decimal import Decimal, InvalidOperation
from enum import Enum
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from hitlsim.config.loader import describe_validation_error
from hitlsim.exceptions import InvalidLogError, LogParseError
from hitlsim.sim.records import ENTRY_TYPES, EventLog
from hitlsim.store.textfile import join_lines, read_text, split_lines, write_text

_MS_SUFFIX = "_ms"
_S_SUFFIX = "_s"


def format_seconds(ms: int) -> str:
    """Integer milliseconds as seconds with three decimals."""
    return f"{ms // 1000}.{ms % 1000:03d}"


def _wire_name(field: str) -> str:
    return field[: -len(_MS_SUFFIX)] + _S_SUFFIX if field.endswith(_MS_SUFFIX) else field


def serialize_entry(entry: Any) -> str:
    parts = []
    for name in type(entry).model_fields:
        value = getattr(entry, name)
        if name.endswith(_MS_SUFFIX):
            encoded = format_seconds(value)
        elif isinstance(value, Enum):
            encoded = json.dumps(value.value)
        else:
            encoded = json.dumps(value)
        parts.append(f"{json.dumps(_wire_name(name))}:{encoded}")
    return "{" + ",".join(parts) + "}"


def serialize_log(log: EventLog) -> str:
    return join_lines([serialize_entry(entry) for entry in log])


def _reject_constant(name: str) -> Any:
    raise ValueError(f"{name} is not allowed")


def _seconds_to_ms(value: Any, key: str) -> int:
    if not isinstance(value, Decimal):
        raise ValueError(f"{key} must be decimal seconds")
    try:
        exponent = value.as_tuple().exponent
        ms = value * 1000
    except InvalidOperation as e:
        raise ValueError(f"{key} is not a number") from e
    if exponent != -3:
        raise ValueError(f"{key} must have exactly three decimals")
    return int(ms)


def _field_value(annotation: Any, value: Any, key: str) -> Any:
    """JSON value for a non-time field, without lax coercion."""
    if isinstance(value, bool) and annotation is not bool:
        raise ValueError(f"{key} must not be a boolean")
    if annotation is float:
        if not isinstance(value, Decimal):
            raise ValueError(f"{key} must be a decimal number")
        number = float(value)
        if not math.isfinite(number):
            raise ValueError(f"{key} is out of range")
        return number
    if isinstance(value, Decimal):
        raise ValueError(f"{key} must not be a decimal number")
    if isinstance(annotation, type) and issubclass(annotation, Enum):
        if not isinstance(value, str):
            raise ValueError(f"{key} must be a string")
        try:
            return annotation(value)
        except ValueError as e:
            raise ValueError(f"{key} has unknown value {value!r}") from e
    return value


def parse_entry(line: str) -> Any:
    """Decode one line into its entry model.

    Raises:
        ValueError: With a description of what is wrong.
    """
    try:
        raw = json.loads(line, parse_float=Decimal, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise ValueError(f"invalid JSON at column {e.colno}: {e.msg}") from e
    if not isinstance(raw, dict):
        raise ValueError("record is not an object")
    kind = raw.get("kind")
    entry_type = ENTRY_TYPES.get(kind) if isinstance(kind, str) else None
    if entry_type is None:
        raise ValueError(f"unknown kind {kind!r}")

    declared = entry_type.model_fields
    ms_fields = {_wire_name(n): n for n in declared if n.endswith(_MS_SUFFIX)}
    fields: dict[str, Any] = {}
    for key, value in raw.items():
        if key in ms_fields:
            fields[ms_fields[key]] = _seconds_to_ms(value, key)
        elif key.endswith(_MS_SUFFIX) or key not in declared:
            raise ValueError(f"unexpected key {key!r}")
        else:
            fields[key] = _field_value(declared[key].annotation, value, key)
    try:
        return entry_type.model_validate(fields, strict=True)
    except ValidationError as e:
        raise ValueError(describe_validation_error(e)) from e


def parse_log(text: str, path: Path | str | None = None) -> EventLog:
    """Parse a log file body.

    Raises:
        LogParseError: With the line of the first bad record, including
            ordering and causality violations.
    """
    lines = split_lines(text, LogParseError, path)
    entries = []
    for number, line in lines:
        try:
            entries.append(parse_entry(line))
        except ValueError as e:
            raise LogParseError(str(e), path=path, line=number) from e
    try:
        return EventLog(tuple(entries))
    except InvalidLogError as e:
        line_number = lines[e.index][0] if e.index is not None else None
        raise LogParseError(str(e), path=path, line=line_number) from e


def read_log(path: Path | str) -> EventLog:
    return parse_log(read_text(path), path)


def write_log(path: Path | str, log: EventLog) -> None:
    write_text(path, serialize_log(log))
