"""Shared helpers for command modules."""

from __future__ import annotations

from typing import Optional

import click

from .. import config
from ..config import OUTPUT_FORMATS


def format_option(default: Optional[str] = None):
    """Reusable click option for choosing output format (default: the configured one)."""

    def decorator(func):
        return click.option(
            "--format",
            "output_format",
            type=click.Choice(OUTPUT_FORMATS),
            default=default,
            help="Output format (defaults to the 'output' config key).",
        )(func)

    return decorator


def threads_option(func):
    """Worker threads for building the semilocal cache."""
    return click.option(
        "--threads",
        type=click.IntRange(min=1),
        default=None,
        help="Threads for cache construction (defaults to the 'threads' config key).",
    )(func)


def slp_and_pattern(func):
    """``SLP`` path argument, optional inline ``PATTERN`` and ``--pattern-file``."""
    func = click.option(
        "--pattern-file",
        type=click.Path(exists=True, dir_okay=False),
        default=None,
        help="Read the pattern from a UTF-8 file instead of the command line.",
    )(func)
    func = click.argument("pattern", required=False)(func)
    return click.argument("slp_path", metavar="SLP", type=click.Path(exists=True, dir_okay=False))(func)


def resolve_format(output_format: Optional[str]) -> str:
    return output_format or config.get_output_format()


def resolve_threads(threads: Optional[int]) -> int:
    return threads or config.get_threads()
