"""Exception hierarchy shared across the package."""

from __future__ import annotations


class OddThickError(Exception):
    """Base class for all package errors."""


class ParameterError(OddThickError, ValueError):
    """Invalid parameters for a generator or operation."""


class DomainError(OddThickError, ValueError):
    """Input outside the domain of an operation (empty graph, partial coloring...)."""


class ParseError(OddThickError, ValueError):
    def __init__(self, message: str, offset: int = 0) -> None:
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class PreconditionError(OddThickError, ValueError):
    """A constructive procedure was called outside its hypotheses."""


class InvariantError(OddThickError, RuntimeError):
    """An internal invariant failed; indicates a bug or a broken input certificate."""


class LemmaTraceError(OddThickError, RuntimeError):
    """The recoloring loop did not shrink its deficiency set.

    Carries the full step trace so the event can be inspected rather than patched.
    """

    def __init__(self, message: str, trace: list[dict]) -> None:
        super().__init__(message)
        self.trace = trace


class SizeCapError(OddThickError, ValueError):
    """Exhaustive enumeration refused because the input exceeds the size cap."""


class BudgetExhausted(OddThickError):
    """Raised inside searches when the node or wall-clock cap is hit; callers turn it into bounds."""
