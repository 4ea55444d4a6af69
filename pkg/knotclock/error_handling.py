"""Standardized error handling for knotclock.

All library errors derive from KnotClockError so the CLI can map them to
its input-error exit code. Errors that signal a broken implementation
(rather than bad input) derive from ClockTheoremViolation and get an exit
code of their own.
"""
from typing import Optional

from rich.console import Console
from rich.traceback import Traceback

_stderr = Console(stderr=True)


class KnotClockError(Exception):
    """Base exception for knotclock errors."""
    pass


class DiagramParseError(KnotClockError):
    """Raised when diagram-code text is malformed or not a planar knot shadow."""
    pass


class NotProperError(KnotClockError):
    """Raised when an operation requires a proper universe."""
    pass


class StarPlacementError(KnotClockError):
    """Raised when a star placement is not a pair of distinct adjacent faces."""
    pass


class UnknownFaceError(KnotClockError):
    """Raised when a face id does not exist in the universe."""
    pass


class InvalidStateError(KnotClockError):
    """Raised when a marker assignment violates the state invariants."""
    pass


class MoveNotAvailableError(KnotClockError):
    """Raised when a transposition is applied to a state that does not admit it."""
    pass


class NoStatesError(KnotClockError):
    """Raised when a star placement admits no state at all."""
    pass


class HypothesisNotMetError(KnotClockError):
    """Raised when a verifier is called outside its hypothesis."""
    pass


class GeneratorError(KnotClockError):
    """Raised when a diagram family cannot be constructed from its parameters."""
    pass


class TableError(KnotClockError):
    """Raised when an embedded table entry fails validation."""
    pass


class AlexanderError(KnotClockError):
    """Raised when the Alexander oracle cannot be evaluated."""
    pass


class UnknownFormatError(KnotClockError):
    """Raised when an export format is not supported."""
    pass


class LatticeFormatError(KnotClockError):
    """Raised when a lattice export does not describe a consistent lattice."""
    pass


class ClockTheoremViolation(KnotClockError):
    """Raised when a runtime check of the clock theorem fails.

    These are implementation bugs: a correct rotation convention can never
    trigger them.
    """
    pass


def log_error(message: str, exception: Optional[Exception] = None, include_trace: bool = False) -> None:
    """
    Log an error message to stderr with optional exception details.

    Args:
        message: Human-readable error message
        exception: Optional exception object
        include_trace: Whether to include the full traceback
    """
    _stderr.print(f"[bold red]Error:[/bold red] {message}")
    if exception is not None:
        _stderr.print(f"   {type(exception).__name__}: {exception}")
    if include_trace and exception is not None:
        _stderr.print(Traceback.from_exception(type(exception), exception, exception.__traceback__))
