"""Configuration related CLI commands."""

from __future__ import annotations

from typing import Optional

import click

from .. import config
from ..core.formatters import format_output
from ..utils import parse_config_value
from .common import format_option


def _load() -> dict:
    try:
        return config.load_config()
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc


@click.group(name="config")
def cmd() -> None:
    """Inspect and update local CLI configuration."""


@cmd.command("show")
@format_option(default="json")
def show_config(output_format: Optional[str]) -> None:
    """Display the current configuration merged over the defaults."""
    click.echo(format_output(_load(), output_format or "json"))


@cmd.command("set")
@click.argument("key", metavar="KEY")
@click.argument("value", metavar="VALUE")
def set_value(key: str, value: str) -> None:
    """Persist KEY (dotted for nested keys, e.g. oracle.max_text) to VALUE."""
    parsed = parse_config_value(value)
    if key == "output" and parsed not in config.OUTPUT_FORMATS:
        raise click.BadParameter(f"must be one of {', '.join(config.OUTPUT_FORMATS)}", param_hint="VALUE")
    _load()
    try:
        config.set_value(key, parsed)
    except KeyError:
        raise click.BadParameter(f"unknown configuration key '{key}'", param_hint="KEY") from None
    click.secho(f"{key} set to {parsed!r}", fg="green")


@cmd.command("reset")
def reset() -> None:
    """Restore the default configuration."""
    config.reset_config()
    click.secho("Configuration reset to defaults.", fg="green")


@cmd.command("path")
def show_path() -> None:
    """Print the path to the configuration file."""
    click.echo(str(config.CONFIG_FILE))
