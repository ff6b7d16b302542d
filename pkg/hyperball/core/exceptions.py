"""
HyperBall - Error Types

Every error raised on purpose by the package derives from HyperballError.
The CLI maps the families below onto its exit codes.

Licensed under the MIT License.
"""

from typing import Optional


class HyperballError(Exception):
    """Base class for all package errors."""


class DimensionMismatchError(HyperballError, ValueError):
    """Two vectors (or a vector and an instance) disagree on d."""


class InstanceError(HyperballError, ValueError):
    """A BitVector or Instance invariant is violated."""


class ParseError(InstanceError):
    """Malformed input text; names the offending line when known."""

    def __init__(self, message: str, line_number: Optional[int] = None) -> None:
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class SolverLimitError(HyperballError, RuntimeError):
    """A solver refuses an input outside its configured limits."""


class VerificationError(HyperballError, RuntimeError):
    """An internal consistency check failed (indicates a bug, never a NO answer)."""


class InvalidDecompositionError(HyperballError, ValueError):
    """A tree decomposition does not fit the incidence graph it is used with."""


class BenchMismatchError(HyperballError, RuntimeError):
    """Two algorithms disagreed on the same benchmark question."""
