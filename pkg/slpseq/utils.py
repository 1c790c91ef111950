"""Utility helpers shared across CLI command modules."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Optional

from .core.slp import Slp, parse_slp
from .errors import PatternError, SlpFormatError


def load_pattern(pattern: Optional[str], pattern_file: Optional[str]) -> str:
    """Resolve the pattern from the positional argument or ``--pattern-file``.

    A trailing newline in the file is dropped; everything else is kept verbatim.
    """
    if pattern is not None and pattern_file is not None:
        raise PatternError("give the pattern inline or with --pattern-file, not both")
    if pattern_file is not None:
        try:
            text = Path(pattern_file).read_bytes().decode("utf-8")
        except UnicodeDecodeError as exc:
            raise PatternError(f"{pattern_file} is not valid UTF-8: {exc}") from exc
        return text[:-1] if text.endswith("\n") else text
    if pattern is None:
        raise PatternError("missing pattern (inline argument or --pattern-file)")
    return pattern


def load_slp(path: str) -> Slp:
    """Parse an SLP file; I/O problems surface as ``SlpFormatError``."""
    try:
        source = Path(path).read_bytes().decode("utf-8")
    except UnicodeDecodeError as exc:
        raise SlpFormatError(f"{path} is not valid UTF-8: {exc}") from exc
    return parse_slp(source)


def parse_config_value(raw: str) -> Any:
    """Interpret ``config set`` values as JSON scalars, falling back to the raw string."""
    raw = raw.strip()
    try:
        return json.loads(raw)
    except json.JSONDecodeError:
        return raw


def decimal(value: int) -> str:
    """Full decimal rendering of an arbitrary-precision count."""
    return str(int(value))
