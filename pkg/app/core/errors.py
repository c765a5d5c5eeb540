"""Exception hierarchy shared by every package.

Each class carries the process exit code the command line tool uses for it:
1 for unreadable documents, 2 for violated preconditions (including failed
validation), 3 when a property guaranteed by a theorem does not hold.
"""

from __future__ import annotations

from typing import Any, Optional


class GradedLieError(Exception):
    """Base class; ``witness`` is a JSON-serialisable description of the failure."""

    exit_code = 2

    def __init__(self, message: str, witness: Optional[dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.witness = witness or {}


class DocumentError(GradedLieError):
    """A document could not be parsed; ``location`` is a JSON path like ``brackets[3].result``."""

    exit_code = 1

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message, {"location": location})
        self.location = location


class PreconditionError(GradedLieError):
    exit_code = 2


class ValidationError(PreconditionError):
    """Input data failed a structural check (Cayley table, Jacobi identity, grading containment)."""


class DimensionError(PreconditionError):
    pass


class ScopeError(PreconditionError):
    """Input is mathematically meaningful but outside what is supported here."""


class InvariantViolation(GradedLieError):
    """A theorem-guaranteed property failed: broken arithmetic or corrupted input."""

    exit_code = 3
