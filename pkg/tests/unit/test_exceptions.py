"""Tests for exception hierarchy."""

from pathlib import Path

import pytest

from hitlsim.exceptions import (
    ConfigError,
    ConfigNotFoundError,
    ConfigValidationError,
    FrameParseError,
    HitlSimError,
    InputError,
    InputFileNotFoundError,
    IntervalParseError,
    InvalidArgumentError,
    InvalidIntervalError,
    InvalidLogError,
    InvalidSeriesError,
    LogParseError,
    ParseError,
    QueuePreconditionError,
    ReliabilityError,
    SimulationError,
    SurveyParseError,
    SurveyValidationError,
    UnknownEventError,
)


class TestHitlSimError:
    """Tests for base HitlSimError."""

    def test_default_message(self) -> None:
        """Test default error message."""
        error = HitlSimError()
        assert str(error) == "An error occurred"
        assert error.user_message == "An error occurred"
        assert error.exit_code == 1

    def test_custom_message(self) -> None:
        """Test custom error message."""
        error = HitlSimError("Custom error")
        assert str(error) == "Custom error"

    def test_custom_user_message(self) -> None:
        """Test custom user message."""
        error = HitlSimError("Internal", user_message="User-friendly message")
        assert error.user_message == "User-friendly message"


class TestInputErrors:
    """Tests for errors the user can fix."""

    @pytest.mark.parametrize(
        "error_class",
        [
            InputError,
            ConfigError,
            ConfigNotFoundError,
            ConfigValidationError,
            InputFileNotFoundError,
            IntervalParseError,
            FrameParseError,
            LogParseError,
            SurveyParseError,
            InvalidSeriesError,
            InvalidIntervalError,
            InvalidLogError,
            SurveyValidationError,
            ReliabilityError,
            InvalidArgumentError,
        ],
    )
    def test_exit_code_two(self, error_class: type[HitlSimError]) -> None:
        """Test that input errors exit with code 2."""
        assert error_class().exit_code == 2

    def test_reliability_default_message(self) -> None:
        """Test the default reliability message."""
        assert str(ReliabilityError()) == "no variance in total scores"

    def test_invalid_log_index(self) -> None:
        """Test that InvalidLogError carries the entry index."""
        error = InvalidLogError("out of order", index=4)
        assert error.index == 4
        assert str(error) == "out of order"

    def test_survey_cell(self) -> None:
        """Test that SurveyValidationError carries the cell position."""
        error = SurveyValidationError("bad cell", row=2, column=3)
        assert (error.row, error.column) == (2, 3)


class TestParseError:
    """Tests for located parse errors."""

    def test_full_location(self) -> None:
        """Test path, line and column in the message."""
        error = ParseError("bad flag", path=Path("frames.txt"), line=3, column=7)
        assert str(error) == "frames.txt, line 3, column 7: bad flag"
        assert error.path == Path("frames.txt")

    def test_line_only(self) -> None:
        """Test a message with only a line number."""
        assert str(IntervalParseError("inverted", line=2)) == "line 2: inverted"

    def test_no_location(self) -> None:
        """Test a message without location."""
        error = LogParseError()
        assert str(error) == "Malformed event log"
        assert error.line is None

    def test_string_path(self) -> None:
        """Test that string paths are converted."""
        assert isinstance(SurveyParseError("x", path="s.csv").path, Path)


class TestSimulationErrors:
    """Tests for simulation errors."""

    def test_internal_exit_code(self) -> None:
        """Test that simulation errors are internal failures."""
        assert SimulationError().exit_code == 1
        assert UnknownEventError().exit_code == 1
        assert QueuePreconditionError().exit_code == 1


class TestExceptionHierarchy:
    """Test exception inheritance."""

    def test_parse_errors_inherit(self) -> None:
        """Test that format-specific parse errors are ParseErrors."""
        for error in (IntervalParseError(), FrameParseError(), LogParseError(), SurveyParseError()):
            assert isinstance(error, ParseError)
            assert isinstance(error, InputError)

    def test_simulation_errors_inherit(self) -> None:
        """Test specific simulation errors inherit correctly."""
        assert isinstance(UnknownEventError(), SimulationError)
        assert isinstance(QueuePreconditionError(), SimulationError)

    def test_can_catch_base_exception(self) -> None:
        """Test catching base exception catches all."""
        errors = [ConfigError(), ParseError(), ReliabilityError(), SimulationError()]
        for error in errors:
            assert isinstance(error, HitlSimError)
