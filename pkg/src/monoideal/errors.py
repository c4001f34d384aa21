"""Exception types shared across the package.

The CLI maps these onto exit codes: parse problems exit 1, violated
preconditions exit 2, and internal cross-check failures exit 3.
"""


class MonoError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(MonoError):
    """Malformed ideal-file input.  Carries a 1-based line/column when known."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            message = f"line {line}, column {col}: {message}"
        super().__init__(message)


class PreconditionError(MonoError):
    """An operation was called on input it does not accept."""


class InternalCheckError(MonoError):
    """Two methods that must agree did not, or a self-check failed.

    This is never the caller's fault; it indicates a bug.
    """
