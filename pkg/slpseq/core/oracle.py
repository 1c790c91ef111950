"""Brute-force references on uncompressed strings.

Nothing here imports the compressed-text machinery; these functions are the
ground truth the ``selfcheck`` command and the differential tests compare
against.  Inputs are capped so a run stays in the seconds range.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..errors import OracleLimitError, PatternError, QueryRangeError

MAX_TEXT = 10_000
MAX_SEMILOCAL = 256

_UNREACHABLE = -(1 << 40)


def _check_cap(length: int, cap: int, what: str) -> None:
    if length > cap:
        raise OracleLimitError(f"{what} has length {length}, oracle cap is {cap}")


def oracle_lcs(a: str, b: str) -> int:
    """Classic quadratic LCS table, one row at a time."""
    prev = [0] * (len(b) + 1)
    for ca in a:
        row = [0]
        for k, cb in enumerate(b, start=1):
            row.append(prev[k - 1] + 1 if ca == cb else max(prev[k], row[k - 1]))
        prev = row
    return prev[-1]


def oracle_suffix_prefix(t: str, p: str, length: int, j_end: int) -> int:
    if not (0 <= length <= len(t) and 0 <= j_end <= len(p)):
        raise QueryRangeError(f"arguments ({length}, {j_end}) out of range")
    return oracle_lcs(t[len(t) - length:], p[:j_end])


def oracle_prefix_suffix(t: str, p: str, length: int, j: int) -> int:
    if not (0 <= length <= len(t) and 0 <= j <= len(p)):
        raise QueryRangeError(f"arguments ({length}, {j}) out of range")
    return oracle_lcs(t[:length], p[j:])


def oracle_substring(t: str, p: str, j: int, j_end: int) -> int:
    if not 0 <= j <= j_end <= len(p):
        raise QueryRangeError(f"arguments ({j}, {j_end}) out of range")
    return oracle_lcs(t, p[j:j_end])


def oracle_score_table(a: str, b: str, cap: int = MAX_SEMILOCAL) -> Dict[Tuple[int, int], int]:
    """A(i0, j0) of the extended alignment dag for i0 in [-m, n], j0 in [0, m + n].

    ``a`` runs down the dag, ``b`` across; outside columns 1..n every diagonal is present.
    """
    m, n = len(a), len(b)
    _check_cap(m, cap, "text")
    _check_cap(n, cap, "pattern")
    # column k of the arrays is dag position k - m, positions -m .. m + n
    width = 2 * m + n + 1
    starts = np.arange(-m, n + 1)
    positions = np.arange(-m, m + n + 1)
    score = np.where(positions[None, :] >= starts[:, None], 0, _UNREACHABLE).astype(np.int64)
    pattern = np.array([ord(ch) for ch in b], dtype=np.int64)
    for ch in a:
        gain = np.ones(width, dtype=np.int64)
        gain[m + 1 : m + n + 1] = pattern == ord(ch)
        step = score.copy()
        step[:, 1:] = np.maximum(score[:, 1:], score[:, :-1] + gain[1:])
        score = np.maximum.accumulate(step, axis=1)
    table: Dict[Tuple[int, int], int] = {}
    for row, i0 in enumerate(range(-m, n + 1)):
        for j0 in range(0, m + n + 1):
            table[(i0, j0)] = j0 - i0 if j0 < i0 else int(score[row, j0 + m])
    return table


def oracle_semilocal(a: str, b: str, cap: int = MAX_SEMILOCAL) -> List[Tuple[int, int]]:
    """Critical points of the extended score matrix, as integer pairs (x, y) for (x+1/2, y+1/2)."""
    m, n = len(a), len(b)
    table = oracle_score_table(a, b, cap)
    points = []
    for x in range(-m, n):
        for y in range(0, m + n):
            here = table[(x, y)]
            if table[(x + 1, y)] + 1 == here == table[(x + 1, y + 1)] == table[(x, y + 1)]:
                points.append((x, y))
    assert len(points) == m + n, f"expected {m + n} critical points, found {len(points)}"
    return points


# --------------------------------------------------------------------------- windows
class _Scanner:
    """Greedy subsequence embedding with per-character position lists."""

    def __init__(self, t: str) -> None:
        self.t = t
        self.positions: Dict[str, List[int]] = {}
        for k, ch in enumerate(t):
            self.positions.setdefault(ch, []).append(k)

    def end_of_match(self, start: int, p: str) -> Optional[int]:
        """Smallest e such that t[start:e] contains p, or None."""
        pos = start
        for ch in p:
            occ = self.positions.get(ch)
            if not occ:
                return None
            k = bisect_left(occ, pos)
            if k == len(occ):
                return None
            pos = occ[k] + 1
        return pos

    def contains(self, start: int, end: int, p: str) -> bool:
        e = self.end_of_match(start, p)
        return e is not None and e <= end


def oracle_prefix_len(t: str, p: str) -> int:
    _check_cap(len(t), MAX_TEXT, "text")
    k = 0
    for ch in t:
        if k < len(p) and p[k] == ch:
            k += 1
    return k


def oracle_contains(t: str, p: str) -> bool:
    return oracle_prefix_len(t, p) == len(p)


def oracle_windows(t: str, p: str, mode: str = "minimal", w: Optional[int] = None, cap: int = MAX_TEXT) -> List[Tuple[int, int]]:
    """Every qualifying window as a 1-based inclusive (start, end) pair, by start."""
    _check_cap(len(t), cap, "text")
    if not p:
        raise PatternError("pattern must be nonempty")
    if mode != "minimal" and (w is None or w < 1):
        raise QueryRangeError(f"{mode} windows need a width w >= 1")
    scan = _Scanner(t)
    m = len(t)
    found: List[Tuple[int, int]] = []
    if mode == "fixed":
        assert w is not None
        for start in range(0, m - w + 1):
            if scan.contains(start, start + w, p):
                found.append((start + 1, start + w))
        return found
    for start in range(m):
        end = scan.end_of_match(start, p)
        if end is None:
            break
        trimmed = scan.contains(start + 1, end, p) or scan.contains(start, end - 1, p)
        if trimmed:
            continue
        if mode == "bounded" and end - start > (w or 0):
            continue
        found.append((start + 1, end))
    return found


def oracle_count_minimal(t: str, p: str) -> int:
    return len(oracle_windows(t, p, "minimal"))


def oracle_count_fixed(t: str, p: str, w: int) -> int:
    return len(oracle_windows(t, p, "fixed", w))


def oracle_count_bounded(t: str, p: str, w: int) -> int:
    return len(oracle_windows(t, p, "bounded", w))
