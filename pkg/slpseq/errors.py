"""Exception types raised by the slpseq library and surfaced by the CLI."""

from __future__ import annotations

from typing import Optional

import click


class SlpseqError(click.ClickException):
    """Base class for every user-facing slpseq failure.

    Deriving from ``click.ClickException`` lets command handlers propagate library
    errors unchanged: click prints ``Error: <message>`` and exits with ``exit_code``.
    """

    exit_code = 2


class SlpFormatError(SlpseqError):
    """Raised when an SLP source is malformed or violates the statement order."""

    def __init__(self, message: str, line_number: Optional[int] = None) -> None:
        prefix = f"line {line_number}: " if line_number is not None else ""
        super().__init__(prefix + message)
        self.line_number = line_number


class TooLongError(SlpseqError):
    """Raised by ``expand`` when the derived string exceeds the requested bound."""

    exit_code = 1

    def __init__(self, length: int, max_len: int) -> None:
        super().__init__(f"expansion has length {length}, limit is {max_len}")
        self.length = length
        self.max_len = max_len


class PatternError(SlpseqError):
    """Raised for an unusable pattern argument."""


class QueryRangeError(SlpseqError):
    """Raised when query arguments fall outside the valid index ranges."""


class SizeMismatchError(SlpseqError):
    """Raised when two operands of a product have incompatible sizes."""


class DuplicateCoordinateError(SlpseqError):
    """Raised by rank compression when a coordinate repeats."""


class OracleLimitError(SlpseqError):
    """Raised when a brute-force reference is asked to exceed its size cap."""


class SelfcheckMismatch(SlpseqError):
    """Raised when ``selfcheck`` finds a disagreement with the brute-force references."""

    exit_code = 1
