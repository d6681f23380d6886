"""Structured logging for hitlsim.

Every record may carry key-value context. Context keys ending in ``_ms``
hold simulation-clock milliseconds and are rendered as ``<name>_s`` with
three decimals, the same convention the event log files use.

Logs always go to stderr; stdout is reserved for reports.
"""

import json
import logging
import sys
from collections.abc import Mapping
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

from rich.console import Console
from rich.logging import RichHandler

# Root of the package logger tree
logger = logging.getLogger("hitlsim")

_CONTEXT_ATTR = "hitlsim_context"


def render_context(context: Mapping[str, Any]) -> dict[str, Any]:
    """Context with simulation times converted from ms to seconds."""
    rendered: dict[str, Any] = {}
    for key, value in context.items():
        if key.endswith("_ms") and isinstance(value, int) and not isinstance(value, bool):
            rendered[f"{key[:-3]}_s"] = f"{value / 1000:.3f}"
        else:
            rendered[key] = value
    return rendered


def _context_of(record: logging.LogRecord) -> dict[str, Any]:
    context = getattr(record, _CONTEXT_ATTR, None)
    return render_context(context) if isinstance(context, Mapping) else {}


class JSONFormatter(logging.Formatter):
    """One JSON object per record, context fields at the top level."""

    def format(self, record: logging.LogRecord) -> str:
        payload: dict[str, Any] = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        payload.update(_context_of(record))
        if record.exc_info:
            payload["exception"] = self.formatException(record.exc_info)
        return json.dumps(payload, default=str)


class ContextFormatter(logging.Formatter):
    """``LEVEL logger: message [k=v ...]`` for plain consoles."""

    def __init__(self, show_level: bool = True) -> None:
        super().__init__()
        self.show_level = show_level

    def format(self, record: logging.LogRecord) -> str:
        message = record.getMessage()
        context = _context_of(record)
        if context:
            message += " [" + " ".join(f"{k}={v}" for k, v in context.items()) + "]"
        if not self.show_level:
            return message
        return f"{record.levelname:8} {record.name}: {message}"


def setup_logging(
    level: str = "WARNING",
    log_file: Path | None = None,
    json_format: bool = False,
    use_color: bool = True,
) -> logging.Logger:
    """Configure the ``hitlsim`` logger.

    Args:
        level: Log level name (DEBUG, INFO, WARNING, ERROR, CRITICAL).
        log_file: Optional file that receives JSON records.
        json_format: JSON records on the console too.
        use_color: Rich console output; plain text otherwise.
    """
    numeric_level = getattr(logging, level.upper(), logging.WARNING)

    logger.setLevel(numeric_level)
    logger.handlers.clear()

    console_handler: logging.Handler
    if json_format:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(JSONFormatter())
    elif use_color:
        console_handler = RichHandler(
            console=Console(stderr=True),
            show_time=False,
            show_path=False,
            markup=False,
        )
        console_handler.setFormatter(ContextFormatter(show_level=False))
    else:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(ContextFormatter())
    console_handler.setLevel(numeric_level)
    logger.addHandler(console_handler)

    if log_file:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(numeric_level)
        file_handler.setFormatter(JSONFormatter())
        logger.addHandler(file_handler)

    logger.propagate = False
    return logger


def get_logger(name: str) -> logging.Logger:
    """Child logger for a module, e.g. ``get_logger(__name__)``."""
    return logging.getLogger(name)


def log_with_context(
    target: logging.Logger,
    level: int,
    message: str,
    **context: Any,
) -> None:
    """Log ``message`` with key-value context attached to the record."""
    if target.isEnabledFor(level):
        target.log(level, message, extra={_CONTEXT_ATTR: context}, stacklevel=2)


def info(message: str, **context: Any) -> None:
    """INFO on the package logger with context."""
    if logger.isEnabledFor(logging.INFO):
        logger.info(message, extra={_CONTEXT_ATTR: context}, stacklevel=2)
