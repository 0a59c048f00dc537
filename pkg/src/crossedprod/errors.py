"""Exception types shared across the package."""


class CrossedProdError(Exception):
    """Base class for all library errors."""


class SystemMismatchError(CrossedProdError):
    """A point, function or element was used with the wrong system."""


class ModeMismatchError(CrossedProdError):
    """Exact and floating scalars were mixed in one computation."""


class UnsupportedQueryError(CrossedProdError):
    """The requested operation is not defined for this input shape."""


class ParseError(CrossedProdError):
    """Syntax error with source position and expected-token data."""

    def __init__(self, message, line, col, expected=()):
        self.message = message
        self.line = line
        self.col = col
        self.expected = tuple(expected)
        loc = f"line {line}, col {col}"
        exp = f" (expected {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{loc}: {message}{exp}")
