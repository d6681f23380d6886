"""Line-delimited file formats: intervals, frames, event logs and surveys.

Every format has a pure ``parse_*``/``serialize_*`` pair and a file-level
``read_*``/``write_*`` pair. Serialization is canonical (UTF-8, LF endings),
so equal values always produce equal bytes.
"""

from hitlsim.store.frames import parse_frames, read_frames, serialize_frames, write_frames
from hitlsim.store.intervals import (
    parse_intervals,
    read_intervals,
    serialize_intervals,
    write_intervals,
)
from hitlsim.store.logfile import parse_log, read_log, serialize_log, write_log
from hitlsim.store.survey import parse_survey, read_survey, serialize_survey, write_survey

__all__ = [
    "parse_frames",
    "parse_intervals",
    "parse_log",
    "parse_survey",
    "read_frames",
    "read_intervals",
    "read_log",
    "read_survey",
    "serialize_frames",
    "serialize_intervals",
    "serialize_log",
    "serialize_survey",
    "write_frames",
    "write_intervals",
    "write_log",
    "write_survey",
]
