"""Exception hierarchy for topocode.

Verification failures are reported through VerificationReport values, not
exceptions. The classes below cover malformed input, broken preconditions and
exhausted resources.
"""

from typing import Any, Optional


class TopocodeError(Exception):
    """Base class for every error raised by topocode."""


class InvalidGraphError(TopocodeError, ValueError):
    """A graph violates simplicity (loop, duplicate edge, bad endpoint)."""


class PreconditionError(TopocodeError):
    """An operation was called outside its documented domain."""


class SizeLimitError(TopocodeError):
    """Input is above a brute-force or construction bound."""


class BudgetExceeded(TopocodeError):
    """A bounded search ran out of nodes before finishing."""

    def __init__(self, message: str, nodes: int = 0):
        super().__init__(message)
        self.nodes = nodes


class UnknownKindError(TopocodeError, KeyError):
    """A labeling kind, matching kind or algorithm tag is not in the catalog."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class MissingParameterError(TopocodeError):
    """A kind needs a parameter (k, d, lambda, ...) that was not supplied."""


class VerificationError(TopocodeError):
    """Input failed the verifier an operation requires."""

    def __init__(self, message: str, report: Optional[Any] = None):
        super().__init__(message)
        self.report = report


class MatrixShapeError(TopocodeError):
    """Matrix rows have unequal length or the shape is too small."""


class MergeConflictError(TopocodeError):
    """Two matrices contribute nonzero values to the same cell."""


class ConstructionError(TopocodeError):
    """A constructive algorithm could not produce a valid labeling."""


class FormatError(TopocodeError):
    """A text, JSON or msgpack payload could not be parsed."""
