"""Shared exception types (the CLI maps these to exit codes)."""


class GraphParseError(ValueError):
    """Malformed graph file; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class CapExceededError(RuntimeError):
    """An enumeration cap or search budget ran out."""
