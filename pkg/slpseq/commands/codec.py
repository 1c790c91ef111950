"""Conversion between plain text and SLP files."""

from __future__ import annotations

from typing import BinaryIO, Optional

import click

from ..core.slp import build_slp_from_text, chain_slp_from_text, expand, serialize_slp
from ..errors import PatternError, TooLongError
from ..utils import load_slp


@click.command("compress")
@click.argument("source", type=click.File("rb"), default="-")
@click.option("--output", "-o", type=click.Path(dir_okay=False, writable=True), default=None,
              help="Write the SLP here instead of stdout.")
@click.option("--chain", is_flag=True, help="Emit a left-deep chain instead of the balanced pairing.")
@click.option("--keep-newline", is_flag=True, help="Keep a trailing newline of SOURCE as part of the text.")
def compress_cmd(source: BinaryIO, output: Optional[str], chain: bool, keep_newline: bool) -> None:
    """Build an SLP for the text in SOURCE (default: stdin)."""
    try:
        text = source.read().decode("utf-8")
    except UnicodeDecodeError as exc:
        raise PatternError(f"{getattr(source, 'name', 'stdin')} is not valid UTF-8: {exc}") from exc
    if not keep_newline and text.endswith("\n"):
        text = text[:-1]
    slp = chain_slp_from_text(text) if chain else build_slp_from_text(text)
    rendered = serialize_slp(slp)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(rendered)
        click.secho(f"Wrote {slp.statement_count} statements for {len(text)} characters to {output}", fg="green", err=True)
    else:
        click.echo(rendered, nl=False)


@click.command("decompress")
@click.argument("slp_path", metavar="SLP", type=click.Path(exists=True, dir_okay=False))
@click.option("--max-bytes", type=click.IntRange(min=0), default=10_000_000, show_default=True,
              help="Refuse to expand texts whose UTF-8 encoding is larger than this.")
def decompress_cmd(slp_path: str, max_bytes: int) -> None:
    """Expand an SLP file to its text."""
    text = expand(load_slp(slp_path), max_len=max_bytes)
    data = text.encode("utf-8")
    if len(data) > max_bytes:
        raise TooLongError(len(data), max_bytes)
    # raw bytes, no ANSI stripping
    click.echo(data)


commands = (compress_cmd, decompress_cmd)
