"""Tests for error handling utilities

Tests the exception hierarchy and the stderr error logger used by the CLI.
"""
import pytest

from knotclock.error_handling import (
    AlexanderError,
    ClockTheoremViolation,
    DiagramParseError,
    GeneratorError,
    HypothesisNotMetError,
    InvalidStateError,
    KnotClockError,
    LatticeFormatError,
    MoveNotAvailableError,
    NoStatesError,
    NotProperError,
    StarPlacementError,
    TableError,
    UnknownFaceError,
    UnknownFormatError,
    log_error,
)


class TestExceptionHierarchy:
    """Test custom exception classes"""

    @pytest.mark.parametrize("error_class", [
        DiagramParseError,
        NotProperError,
        StarPlacementError,
        UnknownFaceError,
        InvalidStateError,
        MoveNotAvailableError,
        NoStatesError,
        HypothesisNotMetError,
        GeneratorError,
        TableError,
        AlexanderError,
        UnknownFormatError,
        LatticeFormatError,
        ClockTheoremViolation,
    ])
    def test_is_knotclock_error(self, error_class):
        """Every library error can be caught as KnotClockError"""
        error = error_class("test message")
        assert isinstance(error, KnotClockError)
        assert str(error) == "test message"

    def test_base_is_exception(self):
        assert isinstance(KnotClockError("x"), Exception)


class TestLogError:
    """Test error logging to stderr"""

    def test_message_only(self, capsys):
        log_error("Something went wrong")
        captured = capsys.readouterr()
        assert "Error:" in captured.err
        assert "Something went wrong" in captured.err
        assert captured.out == ""

    def test_with_exception(self, capsys):
        """The exception type and message follow the summary line"""
        log_error("Parse failed", exception=DiagramParseError("malformed line 1"))
        err = capsys.readouterr().err
        assert "DiagramParseError: malformed line 1" in err

    def test_with_trace(self, capsys):
        """A traceback is printed on request"""
        try:
            raise TableError("bad entry")
        except TableError as exc:
            log_error("Table failed", exception=exc, include_trace=True)
        err = capsys.readouterr().err
        assert "Traceback" in err
        assert "bad entry" in err
