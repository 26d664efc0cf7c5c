"""Shared exception types."""


class ResourceCapError(RuntimeError):
    """A configured size, budget, or retry cap was exceeded."""


class ParseError(ValueError):
    """A text input could not be parsed; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
