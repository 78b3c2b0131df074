"""Exception types shared across the package."""

from __future__ import annotations


class ParseError(ValueError):
    """Malformed textual input.

    ``line`` is 1-based when the input is line oriented, ``offset`` is a
    0-based byte offset for expression grammars.
    """

    def __init__(self, message: str, *, line: int | None = None, offset: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}: "
        elif offset is not None:
            where = f"offset {offset}: "
        super().__init__(where + message)
        self.line = line
        self.offset = offset


class SizeCapError(ValueError):
    """Input exceeds a configured size cap for an exponential routine."""


class InternalConsistencyError(RuntimeError):
    """A state that the underlying theory rules out was reached."""
