"""Stderr diagnostics shared by the library and the command modules.

Results are the only thing ever written to stdout; everything here goes to a
``rich`` console bound to stderr.
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from typing import Iterator

from rich.console import Console
from rich.markup import escape

console = Console(stderr=True, highlight=False)

_verbosity = 0


def set_verbosity(level: int) -> None:
    """Set the global verbosity (0 = warnings only, 1 = info, 2 = debug)."""
    global _verbosity
    _verbosity = max(0, int(level))


def warn(message: str) -> None:
    console.print(f"[yellow]warning:[/yellow] {escape(message)}")


def info(message: str) -> None:
    if _verbosity >= 1:
        console.print(f"[cyan]info:[/cyan] {escape(message)}")


def debug(message: str) -> None:
    if _verbosity >= 2:
        console.print(f"[dim]debug: {escape(message)}[/dim]")


@contextmanager
def timed(label: str) -> Iterator[None]:
    """Report the wall time of the enclosed block at info level."""
    start = time.perf_counter()
    try:
        yield
    finally:
        info(f"{label} took {(time.perf_counter() - start) * 1000:.1f} ms")
