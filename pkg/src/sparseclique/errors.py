"""Exception types shared by the parsers, solvers, and CLI."""


class FormatError(ValueError):
    """Malformed input data; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class UnsupportedFormatError(FormatError):
    """Recognized container but unsupported variant (e.g. complex Matrix Market)."""
