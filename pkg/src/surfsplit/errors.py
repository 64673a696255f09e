"""Exception types shared across the package."""


class InputError(Exception):
    """Invalid user-supplied input (files, graphs, options)."""


class MapError(InputError):
    """A rotation system is invalid or a map operation precondition fails."""


class FormatError(InputError):
    """Malformed text input; carries the offending line number when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InternalCheckError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
