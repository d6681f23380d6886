"""Tests for frame smoothing and event extraction."""

import random

import pytest

from hitlsim.events.frames import (
    EventInterval,
    FrameSeries,
    SmoothingMode,
    extract_events,
    postprocess,
    smooth,
)
from hitlsim.exceptions import InvalidIntervalError, InvalidSeriesError

# --- Independent oracles ---


def naive_smooth(values: list[int], mode: str = "replace") -> list[int]:
    """Count the 9 window cells one by one over a zero-completed grid."""
    length = len(values)
    rows = (length + 2) // 3
    padded = values + [0] * (rows * 3 - length)
    out = []
    for row in range(rows):
        count = 0
        for neighbour in (row - 1, row, row + 1):
            if 0 <= neighbour < rows:
                for col in range(3):
                    count += padded[neighbour * 3 + col]
        for col in range(3):
            if count >= 5:
                out.append(1)
            elif mode == "replace":
                out.append(0)
            else:
                out.append(padded[row * 3 + col])
    return out[:length]


def naive_runs(values: list[int]) -> list[tuple[int, int]]:
    runs = []
    start = None
    for index, value in enumerate(values):
        if value and start is None:
            start = index
        if not value and start is not None:
            runs.append((start, index - 1))
            start = None
    if start is not None:
        runs.append((start, len(values) - 1))
    return runs


def as_pairs(intervals: list[EventInterval]) -> list[tuple[int, int]]:
    return [(i.start_frame, i.end_frame) for i in intervals]


# --- FrameSeries ---


class TestFrameSeries:
    """Tests for FrameSeries validation."""

    def test_empty_series_is_valid(self) -> None:
        series = FrameSeries(())
        assert len(series) == 0
        assert series.num_rows == 0

    def test_rejects_non_binary_flag(self) -> None:
        with pytest.raises(InvalidSeriesError, match="Frame 2"):
            FrameSeries((0, 1, 2))

    def test_rejects_non_positive_frame_rate(self) -> None:
        with pytest.raises(InvalidSeriesError):
            FrameSeries((0, 1), frame_rate=0.0)

    def test_num_rows_rounds_up(self) -> None:
        assert FrameSeries((0,) * 10).num_rows == 4

    def test_from_intervals(self) -> None:
        series = FrameSeries.from_intervals([EventInterval(1, 3), EventInterval(6, 6)], 8)
        assert series.values == (0, 1, 1, 1, 0, 0, 1, 0)

    def test_from_intervals_rejects_overflow(self) -> None:
        with pytest.raises(InvalidIntervalError):
            FrameSeries.from_intervals([EventInterval(5, 9)], 8)


class TestEventInterval:
    """Tests for EventInterval invariants."""

    def test_length_is_inclusive(self) -> None:
        assert EventInterval(10, 20).length == 11

    def test_rejects_inverted(self) -> None:
        with pytest.raises(InvalidIntervalError, match="start_frame > end_frame"):
            EventInterval(20, 10)

    def test_rejects_negative(self) -> None:
        with pytest.raises(InvalidIntervalError):
            EventInterval(-1, 3)

    def test_to_seconds(self) -> None:
        assert EventInterval(25, 49).to_seconds(25.0) == (1.0, 2.0)


# --- smooth ---


class TestSmooth:
    """Tests for the 3 x 3 majority smoothing."""

    def test_isolated_positive_suppressed(self) -> None:
        series = FrameSeries((0, 1, 0, 0, 0, 0, 0, 0, 0))
        assert smooth(series).values == (0,) * 9

    def test_all_ones_preserved(self) -> None:
        assert smooth(FrameSeries((1,) * 9)).values == (1,) * 9

    def test_empty(self) -> None:
        assert smooth(FrameSeries(())).values == ()

    def test_partial_tail_matches_oracle(self) -> None:
        values = [0, 0, 1, 1, 1, 1, 1, 0, 0, 0]
        result = smooth(FrameSeries(tuple(values)))
        assert list(result.values) == naive_smooth(values)
        assert len(result) == 10

    def test_window_of_exactly_five_fires(self) -> None:
        # rows: 3, 2, 0 -> row 0 window = 5, row 1 window = 5
        values = (1, 1, 1, 1, 1, 0, 0, 0, 0)
        assert smooth(FrameSeries(values)).values == (1, 1, 1, 1, 1, 1, 0, 0, 0)

    def test_window_of_four_does_not_fire(self) -> None:
        values = (1, 1, 1, 1, 0, 0, 0, 0, 0)
        assert smooth(FrameSeries(values)).values == (0,) * 9

    def test_set_only_keeps_failed_rows(self) -> None:
        series = FrameSeries((0, 1, 0, 0, 0, 0, 0, 0, 0))
        assert smooth(series, SmoothingMode.SET_ONLY).values == series.values

    def test_single_pass_no_cascade(self) -> None:
        # Row 2 becomes ones; row 4 must still be judged on the original grid.
        values = (1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0)
        result = smooth(FrameSeries(values)).values
        assert result[9:] == (0,) * 6

    def test_frame_rate_passes_through(self) -> None:
        assert smooth(FrameSeries((1, 0, 1), frame_rate=30.0)).frame_rate == 30.0

    def test_unknown_mode_rejected(self) -> None:
        with pytest.raises(InvalidSeriesError, match="Unknown smoothing mode"):
            smooth(FrameSeries((1,)), "majority")

    @pytest.mark.parametrize("mode", ["replace", "set_only"])
    def test_random_series_match_oracle(self, mode: str) -> None:
        rng = random.Random(1234)
        for _ in range(1000):
            length = rng.randint(0, 300)
            density = rng.random()
            values = [int(rng.random() < density) for _ in range(length)]
            result = smooth(FrameSeries(tuple(values)), mode)
            assert list(result.values) == naive_smooth(values, mode)

    def test_replace_rows_are_constant(self) -> None:
        rng = random.Random(7)
        for _ in range(200):
            length = rng.randint(1, 100)
            values = tuple(rng.randint(0, 1) for _ in range(length))
            result = smooth(FrameSeries(values)).values
            for start in range(0, length, 3):
                assert len(set(result[start : start + 3])) == 1


# --- extract_events / postprocess ---


class TestExtractEvents:
    """Tests for run-length event extraction."""

    def test_two_runs(self) -> None:
        series = FrameSeries((0, 1, 1, 1, 0, 0, 1, 0))
        assert as_pairs(extract_events(series)) == [(1, 3), (6, 6)]

    def test_no_events(self) -> None:
        assert extract_events(FrameSeries((0, 0, 0, 0))) == []

    def test_whole_series(self) -> None:
        assert as_pairs(extract_events(FrameSeries((1, 1, 1)))) == [(0, 2)]

    def test_empty(self) -> None:
        assert extract_events(FrameSeries(())) == []

    def test_random_round_trip(self) -> None:
        rng = random.Random(99)
        for _ in range(500):
            length = rng.randint(0, 200)
            values = tuple(rng.randint(0, 1) for _ in range(length))
            events = extract_events(FrameSeries(values))
            assert as_pairs(events) == naive_runs(list(values))
            rebuilt = FrameSeries.from_intervals(events, length)
            assert rebuilt.values == values
            assert extract_events(rebuilt) == events


class TestPostprocess:
    """Tests for the smooth-then-extract composition."""

    def test_isolated_positive_gives_no_events(self) -> None:
        assert postprocess(FrameSeries((0, 1, 0, 0, 0, 0, 0, 0, 0))) == []

    def test_all_ones(self) -> None:
        assert as_pairs(postprocess(FrameSeries((1,) * 9))) == [(0, 8)]

    def test_empty(self) -> None:
        assert postprocess(FrameSeries(())) == []

    def test_random_series_match_composed_oracle(self) -> None:
        rng = random.Random(2024)
        for _ in range(1000):
            length = rng.randint(0, 300)
            values = [rng.randint(0, 1) for _ in range(length)]
            expected = naive_runs(naive_smooth(values))
            assert as_pairs(postprocess(FrameSeries(tuple(values)))) == expected

    def test_sparse_positives_are_suppressed(self) -> None:
        # One positive every 9 frames: no window can hold more than one.
        rng = random.Random(5)
        for _ in range(100):
            length = rng.randint(0, 200)
            offset = rng.randint(0, 8)
            values = tuple(int(i % 9 == offset) for i in range(length))
            assert postprocess(FrameSeries(values)) == []
