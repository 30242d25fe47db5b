"""Exception types raised across the package."""


class ScrollError(Exception):
    """Base class for all package errors."""


class DimensionError(ScrollError, ValueError):
    """Objects from rings of different sizes were combined."""


class ZeroInputError(ScrollError, ValueError):
    """An operation that needs a nonzero polynomial received zero."""


class NotClosedError(ScrollError, ValueError):
    """A closed-only quantity was requested for a graph whose labeling is not closed."""


class PreconditionError(ScrollError, ValueError):
    """Input violates a documented precondition (connectivity, n range, ...)."""


class SizeLimitError(ScrollError, ValueError):
    """Requested computation exceeds the enumeration or evaluation budget."""


class InconsistencyError(ScrollError, ArithmeticError):
    """Two computations that must agree did not. Always a bug, never data."""


class UncertifiedError(ScrollError, ValueError):
    """Regularity was requested without a Cohen-Macaulay certificate."""


class ParseError(ScrollError, ValueError):
    """Malformed polynomial or graph text."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
