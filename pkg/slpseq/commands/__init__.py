"""Commands registered with the top-level CLI."""

from __future__ import annotations

from typing import Iterable

import click

# Query and codec modules expose a tuple ``commands`` of top-level commands;
# config is a group named ``cmd``.


def register(cli: click.Group) -> None:
    """Attach every command to the root CLI."""
    for command in _load_commands():
        cli.add_command(command)


def _load_commands() -> Iterable[click.Command]:
    from . import codec, config_cmd, query, selfcheck

    return (
        *query.commands,
        *codec.commands,
        selfcheck.selfcheck,
        config_cmd.cmd,
    )
