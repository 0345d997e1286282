"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An operation was applied outside its mathematical domain."""


class CapacityError(RuntimeError):
    """An exact algorithm was asked to exceed its validated input size."""


class ParseError(ValueError):
    """A structured text input could not be parsed.

    Carries a 1-based line number and, when it identifies a single bad
    token, a 1-based column offset.
    """

    def __init__(self, message: str, *, line: int | None = None,
                 column: int | None = None) -> None:
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f"line {line}"
            if column is not None:
                loc += f", column {column}"
            loc = f" ({loc})"
        super().__init__(message + loc)
