"""Entry point for the slpseq command-line interface."""

from __future__ import annotations

import click

from . import __version__, config
from .commands import register as register_commands
from .core import diagnostics


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="slpseq")
@click.option("-v", "--verbose", count=True, help="Print progress (-v) and debug detail (-vv) to stderr.")
@click.pass_context
def cli(ctx: click.Context, verbose: int) -> None:
    """Subsequence and LCS queries on SLP-compressed texts, without decompression."""
    ctx.ensure_object(dict)
    try:
        configured = config.get_verbosity()
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc
    diagnostics.set_verbosity(verbose or configured)


# Register commands at import time.
register_commands(cli)


def main() -> None:  # pragma: no cover - convenience entry point
    cli()


if __name__ == "__main__":  # pragma: no cover
    main()
