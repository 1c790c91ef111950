"""Query commands: recognition, LCS and window counting on an SLP file."""

from __future__ import annotations

import time
from typing import Any, Callable, Dict, Optional

import click

from .. import config
from ..core.formatters import format_output
from ..core.recognition import MODES, Recognizer
from ..core.semilocal import dump_nonzeros
from ..core.slp import Slp, slp_info
from ..utils import decimal, load_pattern, load_slp
from .common import format_option, resolve_format, resolve_threads, slp_and_pattern, threads_option


def _record(name: str, slp: Slp, pattern: str, result: str, started: float) -> Dict[str, Any]:
    return {
        "query": name,
        "result": result,
        "m": decimal(slp.text_length),
        "n": len(pattern),
        "mbar": slp.statement_count,
        "elapsed_ms": round((time.perf_counter() - started) * 1000, 3),
    }


def _run(
    name: str,
    slp_path: str,
    pattern: Optional[str],
    pattern_file: Optional[str],
    output_format: Optional[str],
    threads: Optional[int],
    answer: Callable[[Recognizer], str],
) -> None:
    started = time.perf_counter()
    slp = load_slp(slp_path)
    text = load_pattern(pattern, pattern_file)
    recognizer = Recognizer(slp, text, resolve_threads(threads))
    result = answer(recognizer)
    click.echo(format_output(_record(name, slp, text, result, started), resolve_format(output_format)))


@click.command("contains")
@slp_and_pattern
@format_option()
def contains_cmd(slp_path: str, pattern: Optional[str], pattern_file: Optional[str], output_format: Optional[str]) -> None:
    """Print true if the text contains PATTERN as a subsequence."""
    _run("contains", slp_path, pattern, pattern_file, output_format, 1,
         lambda r: "true" if r.contains() else "false")


@click.command("prefix-len")
@slp_and_pattern
@format_option()
def prefix_len_cmd(slp_path: str, pattern: Optional[str], pattern_file: Optional[str], output_format: Optional[str]) -> None:
    """Length of the longest prefix of PATTERN that is a subsequence of the text."""
    _run("prefix-len", slp_path, pattern, pattern_file, output_format, 1,
         lambda r: decimal(r.prefix_length()))


@click.command("lcs")
@slp_and_pattern
@format_option()
@threads_option
def lcs_cmd(
    slp_path: str, pattern: Optional[str], pattern_file: Optional[str], output_format: Optional[str], threads: Optional[int]
) -> None:
    """Length of a longest common subsequence of the text and PATTERN."""
    _run("lcs", slp_path, pattern, pattern_file, output_format, threads, lambda r: decimal(r.lcs()))


@click.command("count-min")
@slp_and_pattern
@format_option()
@threads_option
def count_min_cmd(
    slp_path: str, pattern: Optional[str], pattern_file: Optional[str], output_format: Optional[str], threads: Optional[int]
) -> None:
    """Count windows containing PATTERN minimally."""
    _run("count-min", slp_path, pattern, pattern_file, output_format, threads,
         lambda r: decimal(r.count_minimal()))


@click.command("count-fixed")
@slp_and_pattern
@click.option("--w", "width", type=click.IntRange(min=1), required=True, help="Window length.")
@format_option()
@threads_option
def count_fixed_cmd(
    slp_path: str,
    pattern: Optional[str],
    pattern_file: Optional[str],
    width: int,
    output_format: Optional[str],
    threads: Optional[int],
) -> None:
    """Count windows of length W containing PATTERN."""
    _run("count-fixed", slp_path, pattern, pattern_file, output_format, threads,
         lambda r: decimal(r.count_fixed(width)))


@click.command("count-bounded")
@slp_and_pattern
@click.option("--w", "width", type=click.IntRange(min=1), required=True, help="Largest window length.")
@format_option()
@threads_option
def count_bounded_cmd(
    slp_path: str,
    pattern: Optional[str],
    pattern_file: Optional[str],
    width: int,
    output_format: Optional[str],
    threads: Optional[int],
) -> None:
    """Count windows of length at most W containing PATTERN minimally."""
    _run("count-bounded", slp_path, pattern, pattern_file, output_format, threads,
         lambda r: decimal(r.count_bounded(width)))


@click.command("report")
@slp_and_pattern
@click.option("--mode", type=click.Choice(MODES), default="minimal", show_default=True)
@click.option("--w", "width", type=click.IntRange(min=1), default=None, help="Window length (fixed/bounded).")
@click.option("--limit", type=click.IntRange(min=1), default=None, help="Windows to print (defaults to 'report_limit').")
@format_option()
@threads_option
def report_cmd(
    slp_path: str,
    pattern: Optional[str],
    pattern_file: Optional[str],
    mode: str,
    width: Optional[int],
    limit: Optional[int],
    output_format: Optional[str],
    threads: Optional[int],
) -> None:
    """List windows as 1-based inclusive START END pairs, in start order."""
    if mode != "minimal" and width is None:
        raise click.UsageError(f"--mode {mode} requires --w")
    started = time.perf_counter()
    slp = load_slp(slp_path)
    text = load_pattern(pattern, pattern_file)
    limit = limit or config.get_report_limit()
    report = Recognizer(slp, text, resolve_threads(threads)).report(mode, limit, width)
    fmt = resolve_format(output_format)

    if fmt == "plain":
        for start, end in report.windows:
            click.echo(f"{start} {end}")
        if report.truncated:
            click.echo("# truncated")
        return
    if fmt == "table":
        rows = [{"start": decimal(s), "end": decimal(e)} for s, e in report.windows]
        click.echo(format_output(rows, fmt))
        if report.truncated:
            click.echo(f"truncated after {limit} windows", err=True)
        return
    record = _record("report", slp, text, decimal(len(report.windows)), started)
    record.update(
        mode=mode,
        windows=[[decimal(s), decimal(e)] for s, e in report.windows],
        truncated=report.truncated,
    )
    click.echo(format_output(record, fmt))


@click.command("info")
@click.argument("slp_path", metavar="SLP", type=click.Path(exists=True, dir_okay=False))
@format_option()
def info_cmd(slp_path: str, output_format: Optional[str]) -> None:
    """Summarize an SLP file: statements, text length, depth, alphabet."""
    summary = slp_info(load_slp(slp_path))
    summary["m"] = decimal(summary["m"])  # type: ignore[arg-type]
    click.echo(format_output(summary, resolve_format(output_format)))


@click.command("dump")
@slp_and_pattern
@threads_option
def dump_cmd(slp_path: str, pattern: Optional[str], pattern_file: Optional[str], threads: Optional[int]) -> None:
    """Print the root partial score matrix as sorted doubled-coordinate pairs."""
    recognizer = Recognizer(load_slp(slp_path), load_pattern(pattern, pattern_file), resolve_threads(threads))
    click.echo(dump_nonzeros(recognizer.root_entry().psm), nl=False)


commands = (
    contains_cmd,
    prefix_len_cmd,
    lcs_cmd,
    count_min_cmd,
    count_fixed_cmd,
    count_bounded_cmd,
    report_cmd,
    info_cmd,
    dump_cmd,
)
