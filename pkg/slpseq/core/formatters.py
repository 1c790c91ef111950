"""Output formatting for slpseq query results."""

from __future__ import annotations

import json
from io import StringIO
from typing import Any, Dict, List, Union

import yaml
from rich import box
from rich.console import Console
from rich.table import Table


class Formatter:
    """Formats result records in the ``plain``, ``json``, ``yaml`` or ``table`` style."""

    def __init__(self, format_type: str = "plain") -> None:
        self.format_type = format_type.lower()

    def format(self, data: Any) -> str:
        """Format data according to the configured format type."""
        if self.format_type == "json":
            return self.format_json(data)
        elif self.format_type == "yaml":
            return self.format_yaml(data)
        elif self.format_type == "table":
            return self.format_table(data)
        else:
            return self.format_plain(data)

    def format_plain(self, data: Any) -> str:
        """Single-line rendering: the ``result`` of a record, or ``key: value`` lines for a mapping."""
        if isinstance(data, dict):
            if "result" in data:
                return str(data["result"])
            return "\n".join(f"{key}: {self._format_value(value)}" for key, value in data.items())
        if isinstance(data, list):
            return "\n".join(self._format_value(item) for item in data)
        return self._format_value(data)

    def format_json(self, data: Any, *, indent: int = 2) -> str:
        return json.dumps(data, indent=indent, default=str, ensure_ascii=False)

    def format_yaml(self, data: Any) -> str:
        return yaml.safe_dump(data, default_flow_style=False, sort_keys=False, allow_unicode=True).rstrip("\n")

    def format_table(self, data: Union[List[Dict[str, Any]], Dict[str, Any]]) -> str:
        """Render as a rich table; a single mapping becomes a two-column key/value table."""
        if not data:
            return "No data to display"

        if isinstance(data, dict):
            table = Table(box=box.ROUNDED, show_header=True, header_style="bold cyan")
            table.add_column("Field")
            table.add_column("Value", overflow="fold")
            for key, value in data.items():
                table.add_row(self._format_header(key), self._format_value(value))
            return self._render(table)

        keys: List[str] = []
        for item in data:
            for key in item:
                if key not in keys:
                    keys.append(key)
        table = Table(box=box.ROUNDED, show_header=True, header_style="bold cyan")
        for key in keys:
            table.add_column(self._format_header(key), overflow="fold")
        for item in data:
            table.add_row(*(self._format_value(item.get(key, "")) for key in keys))
        return self._render(table)

    @staticmethod
    def _render(table: Table) -> str:
        string_io = StringIO()
        console = Console(file=string_io, force_terminal=False, width=120)
        console.print(table)
        return string_io.getvalue().rstrip("\n")

    @staticmethod
    def _format_header(key: str) -> str:
        # snake_case to Title Case
        return key.replace("_", " ").title()

    @staticmethod
    def _format_value(value: Any) -> str:
        if value is None:
            return ""
        if isinstance(value, bool):
            return "true" if value else "false"
        if isinstance(value, (dict, list)):
            return json.dumps(value, default=str)
        return str(value)


def format_output(data: Any, format_type: str = "plain") -> str:
    """Convenience function to format output."""
    return Formatter(format_type).format(data)
