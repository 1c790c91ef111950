"""Configuration helpers for the slpseq CLI.

User defaults (output format, worker threads, oracle size caps, ...) live in
``~/.slpseq/config.json``; set ``SLPSEQ_HOME`` to relocate the directory.  This
module provides small convenience helpers for reading and mutating that file
while hiding filesystem details from the command implementations.
"""

from __future__ import annotations

import copy
import json
import os
from pathlib import Path
from typing import Any, Dict

CONFIG_DIR = Path(os.environ.get("SLPSEQ_HOME") or Path.home() / ".slpseq")
CONFIG_FILE = CONFIG_DIR / "config.json"

OUTPUT_FORMATS = ["plain", "json", "yaml", "table"]

DEFAULT_CONFIG: Dict[str, Any] = {
    "output": "plain",
    "threads": 1,
    "verbosity": 0,
    "report_limit": 10,
    "selfcheck_max_expand": 10_000,
    "oracle": {
        "max_text": 10_000,
        "max_semilocal": 256,
    },
}


def _ensure_dir() -> None:
    CONFIG_FILE.parent.mkdir(parents=True, exist_ok=True)


def load_config() -> Dict[str, Any]:
    """Return the persisted configuration, falling back to defaults."""
    merged = copy.deepcopy(DEFAULT_CONFIG)
    if CONFIG_FILE.exists():
        try:
            with CONFIG_FILE.open("r", encoding="utf-8") as fh:
                data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"Invalid JSON in {CONFIG_FILE}: {exc}") from exc
        merged.update({k: v for k, v in data.items() if k != "oracle"})
        if isinstance(data.get("oracle"), dict):
            merged["oracle"].update(data["oracle"])
    return merged


def save_config(config: Dict[str, Any]) -> None:
    """Persist the given configuration dictionary."""
    _ensure_dir()
    with CONFIG_FILE.open("w", encoding="utf-8") as fh:
        json.dump(config, fh, indent=2, sort_keys=True)


def update_config(**updates: Any) -> Dict[str, Any]:
    """Merge primitive updates into the configuration and persist."""
    config = load_config()
    config.update(updates)
    save_config(config)
    return config


def set_value(dotted_key: str, value: Any) -> Dict[str, Any]:
    """Set ``key`` or ``section.key`` and persist.

    Unknown keys are rejected so typos do not silently create dead settings.
    """
    config = load_config()
    parts = dotted_key.split(".")
    target = config
    defaults: Any = DEFAULT_CONFIG
    for part in parts[:-1]:
        if not isinstance(defaults.get(part), dict):
            raise KeyError(dotted_key)
        defaults = defaults[part]
        target = target.setdefault(part, {})
    if parts[-1] not in defaults or isinstance(defaults[parts[-1]], dict):
        raise KeyError(dotted_key)
    target[parts[-1]] = value
    save_config(config)
    return config


def reset_config() -> Dict[str, Any]:
    """Restore the defaults on disk."""
    config = copy.deepcopy(DEFAULT_CONFIG)
    save_config(config)
    return config


def get_output_format() -> str:
    """Return the default output format for query commands."""
    value = str(load_config().get("output") or "plain")
    return value if value in OUTPUT_FORMATS else "plain"


def get_threads() -> int:
    """Return the number of worker threads used to build semilocal caches."""
    return max(1, int(load_config().get("threads", 1)))


def get_verbosity() -> int:
    """Return the configured diagnostics verbosity."""
    return int(load_config().get("verbosity", 0))


def get_report_limit() -> int:
    """Return the default number of windows printed by ``report``."""
    return max(1, int(load_config().get("report_limit", 10)))


def get_oracle_limits() -> Dict[str, int]:
    """Return the brute-force size caps."""
    return {k: int(v) for k, v in load_config().get("oracle", {}).items()}


def get_selfcheck_max_expand() -> int:
    """Return the largest text ``selfcheck`` is willing to expand."""
    return int(load_config().get("selfcheck_max_expand", 10_000))
