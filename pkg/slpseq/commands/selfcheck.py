"""Differential self-check of the compressed algorithms against the brute-force oracles."""

from __future__ import annotations

from typing import Any, Callable, List, Optional, Sequence, Tuple

import click
from rich import box
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from .. import config
from ..core import diagnostics, oracle
from ..core.recognition import Recognizer
from ..core.semilocal import query_prefix_suffix, query_string_substring, query_suffix_prefix
from ..core.slp import Slp, expand, parse_slp, serialize_slp
from ..errors import SelfcheckMismatch, TooLongError
from ..utils import load_pattern, load_slp
from .common import threads_option

Row = Tuple[str, str, str, str]

# exhaustive query grids only below this text length
_GRID_LIMIT = 64


def _default_patterns(slp: Slp) -> List[str]:
    alphabet = slp.alphabet()
    patterns = [alphabet[0], "".join(alphabet[:4])]
    if len(alphabet) > 1:
        patterns.append(alphabet[1] + alphabet[0] + alphabet[1])
    return list(dict.fromkeys(patterns))


def _default_widths(m: int, n: int) -> List[int]:
    return sorted({max(1, n), min(m, 2 * n + 1), m})


class _Checker:
    def __init__(self) -> None:
        self.rows: List[Row] = []

    def compare(self, name: str, ours: Any, reference: Any) -> None:
        status = "PASS" if ours == reference else "FAIL"
        self.rows.append((name, self._show(ours), self._show(reference), status))

    def run(self, name: str, check: Callable[[], None]) -> None:
        try:
            check()
        except AssertionError as exc:
            self.rows.append((name, str(exc) or "assertion failed", "", "FAIL"))
        else:
            self.rows.append((name, "ok", "", "PASS"))

    def skip(self, name: str, reason: str) -> None:
        self.rows.append((name, reason, "", "SKIP"))

    @property
    def failures(self) -> int:
        return sum(1 for row in self.rows if row[3] == "FAIL")

    @staticmethod
    def _show(value: Any) -> str:
        text = str(value)
        return text if len(text) <= 48 else text[:45] + "..."


def _check_pattern(checker: _Checker, slp: Slp, text: Optional[str], pattern: str,
                   widths: Sequence[int], threads: int) -> None:
    recognizer = Recognizer(slp, pattern, threads)
    m, n = slp.text_length, len(pattern)
    tag = f"[{pattern}]"

    if text is None:
        checker.run(f"{tag} root matrix invariants", lambda: recognizer.root_entry().psm.check())
        checker.compare(f"{tag} contains == (lcs == n)", recognizer.contains(), recognizer.lcs() == n)
        checker.compare(f"{tag} bounded(w=m) == minimal", recognizer.count_bounded(m), recognizer.count_minimal())
        for label in ("contains", "prefix-len", "lcs", "count-min"):
            checker.skip(f"{tag} {label} vs oracle", "text too long to expand")
        return

    checker.compare(f"{tag} contains", recognizer.contains(), oracle.oracle_contains(text, pattern))
    checker.compare(f"{tag} prefix-len", recognizer.prefix_length(), oracle.oracle_prefix_len(text, pattern))
    checker.compare(f"{tag} lcs", recognizer.lcs(), oracle.oracle_lcs(text, pattern))
    checker.compare(f"{tag} count-min", recognizer.count_minimal(), oracle.oracle_count_minimal(text, pattern))
    for w in widths:
        checker.compare(f"{tag} count-fixed w={w}", recognizer.count_fixed(w), oracle.oracle_count_fixed(text, pattern, w))
        checker.compare(f"{tag} count-bounded w={w}", recognizer.count_bounded(w),
                        oracle.oracle_count_bounded(text, pattern, w))
    everything = recognizer.report("minimal", max(1, m))
    checker.compare(f"{tag} report minimal", everything.windows, oracle.oracle_windows(text, pattern, "minimal"))

    entry = recognizer.root_entry()
    checker.run(f"{tag} root matrix invariants", entry.psm.check)
    if m > _GRID_LIMIT:
        checker.skip(f"{tag} semilocal query grid", f"text longer than {_GRID_LIMIT}")
        return
    idx = entry.index
    mismatches = [
        ("substring", j, k) for j in range(n + 1) for k in range(j, n + 1)
        if query_string_substring(idx, j, k) != oracle.oracle_substring(text, pattern, j, k)
    ] + [
        ("suffix-prefix", l, k) for l in range(m + 1) for k in range(n + 1)
        if query_suffix_prefix(idx, l, k) != oracle.oracle_suffix_prefix(text, pattern, l, k)
    ] + [
        ("prefix-suffix", l, j) for l in range(m + 1) for j in range(n + 1)
        if query_prefix_suffix(idx, l, j) != oracle.oracle_prefix_suffix(text, pattern, l, j)
    ]
    checker.compare(f"{tag} semilocal query grid", mismatches[:3], [])

    limits = config.get_oracle_limits()
    cap = limits.get("max_semilocal", oracle.MAX_SEMILOCAL)
    if m <= cap and n <= cap:
        def partial(points):
            return sorted((x, y) for x, y in points if 0 <= x < n or 0 <= y < n)

        checker.compare(
            f"{tag} root matrix vs critical points",
            partial(entry.psm.nonzeros),
            partial(oracle.oracle_semilocal(text, pattern, cap)),
        )


@click.command("selfcheck")
@click.argument("slp_path", metavar="SLP", type=click.Path(exists=True, dir_okay=False))
@click.argument("pattern", required=False)
@click.option("--pattern-file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Read the pattern from a UTF-8 file.")
@click.option("--w", "widths", type=click.IntRange(min=1), multiple=True,
              help="Window length to check (repeatable; default: a few derived from m and n).")
@threads_option
def selfcheck(
    slp_path: str, pattern: Optional[str], pattern_file: Optional[str], widths: Tuple[int, ...], threads: Optional[int]
) -> None:
    """Compare every query on SLP against brute force and print a PASS/FAIL table.

    Without a pattern, a few patterns are derived from the SLP's alphabet.  Texts
    longer than the 'selfcheck_max_expand' config key are only checked for
    internal consistency.
    """
    slp = load_slp(slp_path)
    patterns = (
        [load_pattern(pattern, pattern_file)] if pattern is not None or pattern_file is not None
        else _default_patterns(slp)
    )
    checker = _Checker()

    round_trip = parse_slp(serialize_slp(slp))
    checker.compare("serialize/parse round trip", round_trip == slp, True)

    limit = min(config.get_selfcheck_max_expand(), config.get_oracle_limits().get("max_text", oracle.MAX_TEXT))
    try:
        text: Optional[str] = expand(slp, max_len=limit)
    except TooLongError as exc:
        diagnostics.info(f"not expanding: {exc.message}")
        text = None
    if text is not None:
        checker.compare("expanded length", len(text), slp.text_length)

    thread_count = threads or config.get_threads()
    for p in patterns:
        if not p:
            checker.skip("empty pattern", "counting needs n >= 1")
            continue
        chosen = list(widths) or _default_widths(slp.text_length, len(p))
        _check_pattern(checker, slp, text, p, chosen, thread_count)

    table = Table(box=box.ROUNDED, show_header=True, header_style="bold cyan", title=escape(f"selfcheck {slp_path}"))
    for column in ("Check", "Compressed", "Oracle", "Status"):
        table.add_column(column, overflow="fold")
    colors = {"PASS": "green", "FAIL": "red", "SKIP": "yellow"}
    for name, ours, reference, status in checker.rows:
        table.add_row(escape(name), escape(ours), escape(reference), f"[{colors[status]}]{status}[/{colors[status]}]")
    Console(width=120).print(table)

    if checker.failures:
        raise SelfcheckMismatch(f"{checker.failures} check(s) failed")
    click.echo("PASS")
