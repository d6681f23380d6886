"""Frame-level anomaly flags to event intervals.

Per-frame binary predictions are laid out as an N x 3 grid (row ``i`` holds
frames ``3i, 3i+1, 3i+2``), smoothed with a 3 x 3 majority window, and the
surviving runs of anomalous frames become inclusive event intervals.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum

import numpy as np
import numpy.typing as npt

from hitlsim.exceptions import InvalidIntervalError, InvalidSeriesError

ROW_WIDTH = 3
WINDOW_ROWS = 3
# Strictly more than half of the 9 window entries.
MAJORITY_COUNT = 5


class SmoothingMode(str, Enum):
    """What happens to a row whose window fails the majority test."""

    REPLACE = "replace"  # row becomes all zeros
    SET_ONLY = "set_only"  # row keeps its original frames


@dataclass(frozen=True)
class FrameSeries:
    """Per-frame binary anomaly flags.

    Attributes:
        values: One flag per frame, 0 = normal, 1 = anomalous.
        frame_rate: Frames per second, if known.
    """

    values: tuple[int, ...]
    frame_rate: float | None = None

    def __post_init__(self) -> None:
        values = tuple(self.values)
        for index, value in enumerate(values):
            if value not in (0, 1):
                raise InvalidSeriesError(
                    f"Frame {index} has flag {value!r}; flags must be 0 or 1"
                )
        object.__setattr__(self, "values", tuple(int(v) for v in values))
        if self.frame_rate is not None and not self.frame_rate > 0:
            raise InvalidSeriesError(
                f"frame_rate must be positive, got {self.frame_rate!r}"
            )

    @classmethod
    def from_array(
        cls, array: npt.ArrayLike, frame_rate: float | None = None
    ) -> "FrameSeries":
        """Build a series from any 1-D array-like of flags."""
        flat = np.asarray(array).ravel()
        return cls(tuple(flat.tolist()), frame_rate)

    @classmethod
    def from_intervals(
        cls,
        intervals: Iterable["EventInterval"],
        length: int,
        frame_rate: float | None = None,
    ) -> "FrameSeries":
        """Rebuild a series of ``length`` frames with ``intervals`` set to 1."""
        flags = np.zeros(length, dtype=np.int8)
        for interval in intervals:
            if interval.end_frame >= length:
                raise InvalidIntervalError(
                    f"Interval {interval} does not fit in {length} frames"
                )
            flags[interval.start_frame : interval.end_frame + 1] = 1
        return cls.from_array(flags, frame_rate)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def num_rows(self) -> int:
        """Rows of the N x 3 grid (the last one may be partial)."""
        return -(-len(self.values) // ROW_WIDTH)

    @property
    def anomalous_count(self) -> int:
        return sum(self.values)

    def as_array(self) -> npt.NDArray[np.int8]:
        return np.asarray(self.values, dtype=np.int8)


@dataclass(frozen=True, order=True)
class EventInterval:
    """Inclusive ``[start_frame, end_frame]`` anomalous segment."""

    start_frame: int
    end_frame: int

    def __post_init__(self) -> None:
        start, end = int(self.start_frame), int(self.end_frame)
        if start < 0 or end < 0:
            raise InvalidIntervalError(
                f"Interval ({start}, {end}) has a negative frame index"
            )
        if start > end:
            raise InvalidIntervalError(
                f"Interval ({start}, {end}) has start_frame > end_frame"
            )
        object.__setattr__(self, "start_frame", start)
        object.__setattr__(self, "end_frame", end)

    @property
    def length(self) -> int:
        """Number of frames covered."""
        return self.end_frame - self.start_frame + 1

    def overlaps(self, other: "EventInterval") -> bool:
        return self.start_frame <= other.end_frame and other.start_frame <= self.end_frame

    def to_seconds(self, frame_rate: float) -> tuple[float, float]:
        """Clip bounds in seconds: start of the first frame to end of the last."""
        if not frame_rate > 0:
            raise InvalidSeriesError(f"frame_rate must be positive, got {frame_rate!r}")
        return self.start_frame / frame_rate, (self.end_frame + 1) / frame_rate

    def __str__(self) -> str:
        return f"({self.start_frame},{self.end_frame})"


def _coerce_mode(mode: SmoothingMode | str) -> SmoothingMode:
    try:
        return SmoothingMode(mode)
    except ValueError as e:
        valid = ", ".join(m.value for m in SmoothingMode)
        raise InvalidSeriesError(
            f"Unknown smoothing mode {mode!r}. Valid options: {valid}"
        ) from e


def smooth(
    series: FrameSeries, mode: SmoothingMode | str = SmoothingMode.REPLACE
) -> FrameSeries:
    """Apply the 3 x 3 majority window to a frame series.

    Every row is decided from the original grid in a single pass: a row whose
    window (itself plus the rows above and below, out-of-range rows counting
    as zeros) holds at least 5 anomalous frames becomes all ones. Otherwise it
    becomes all zeros (``replace``) or keeps its frames (``set_only``). A
    partial last row is zero-completed for counting and the output is cut back
    to the input length.

    Args:
        series: Input flags.
        mode: Treatment of rows that fail the majority test.

    Returns:
        A series of the same length and frame rate.
    """
    mode = _coerce_mode(mode)
    length = len(series)
    if length == 0:
        return FrameSeries((), series.frame_rate)

    rows = series.num_rows
    grid = np.zeros(rows * ROW_WIDTH, dtype=np.int8)
    grid[:length] = series.as_array()
    grid = grid.reshape(rows, ROW_WIDTH)

    row_counts = grid.sum(axis=1, dtype=np.int64)
    padded = np.pad(row_counts, WINDOW_ROWS // 2)
    window_counts = padded[:-2] + padded[1:-1] + padded[2:]
    majority = window_counts >= MAJORITY_COUNT

    if mode is SmoothingMode.REPLACE:
        smoothed = np.repeat(majority, ROW_WIDTH).astype(np.int8)
    else:
        smoothed = np.where(majority[:, None], 1, grid).astype(np.int8).ravel()

    return FrameSeries.from_array(smoothed[:length], series.frame_rate)


def extract_events(series: FrameSeries) -> list[EventInterval]:
    """Merge maximal runs of anomalous frames into intervals, in frame order."""
    flags = series.as_array()
    if flags.size == 0:
        return []
    edges = np.diff(np.concatenate(([0], flags, [0])).astype(np.int8))
    starts = np.flatnonzero(edges == 1)
    ends = np.flatnonzero(edges == -1) - 1
    return [EventInterval(int(s), int(e)) for s, e in zip(starts, ends, strict=True)]


def postprocess(
    series: FrameSeries, mode: SmoothingMode | str = SmoothingMode.REPLACE
) -> list[EventInterval]:
    """Smooth a frame series and extract its events."""
    return extract_events(smooth(series, mode))


def canonical_order(intervals: Sequence[EventInterval]) -> list[EventInterval]:
    """Sort intervals by (start, end)."""
    return sorted(intervals)
