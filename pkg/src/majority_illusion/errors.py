"""Exception types shared across the package."""

from __future__ import annotations


class GraphError(ValueError):
    """Invalid graph construction (out-of-range node id, self-loop, bad size)."""


class FormatError(ValueError):
    """Malformed graph / colored-graph text."""


class FormulaSyntaxError(ValueError):
    """Malformed formula text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


class InfeasibleError(ValueError):
    """A construction was requested for parameters proven impossible.

    Carries the feasibility verdict so callers can report reason codes.
    """

    def __init__(self, message: str, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class InternalInvariantError(RuntimeError):
    """A guaranteed postcondition failed; indicates a defect, not bad input."""
