"""Subsequence recognition over an SLP-compressed text.

Everything here works symbol by symbol, bottom-up over the program, and never
expands the text.  Window positions and counts are Python ints, so texts of
length 2**60 are handled exactly.

Window conventions: internally a window is a 0-based half-open ``(start, end)``
pair relative to the symbol it lives in; :func:`report_windows` converts to the
1-based inclusive positions users see.
"""

from __future__ import annotations

import heapq
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

from ..errors import PatternError, QueryRangeError
from . import diagnostics
from .semilocal import (
    DominanceIndex,
    PartialScoreMatrix,
    base_case,
    build_index,
    concat,
    query_prefix_suffix,
    query_string_substring,
    query_suffix_prefix,
)
from .slp import Concat, Slp, Terminal

Window = Tuple[int, int]

MODES = ("minimal", "fixed", "bounded")


# ---------------------------------------------------------------------- jump table
def build_jump_table(slp: Slp, pattern: str) -> Dict[int, List[int]]:
    """Per reachable symbol, ``table[k]`` = k + longest prefix of ``pattern[k:]`` inside the symbol."""
    n = len(pattern)
    table: Dict[int, List[int]] = {}
    for sym in sorted(slp.reachable()):
        stmt = slp.statement(sym)
        if isinstance(stmt, Terminal):
            table[sym] = [k + 1 if k < n and pattern[k] == stmt.char else k for k in range(n + 1)]
        else:
            first, second = table[stmt.left], table[stmt.right]
            table[sym] = [second[step] for step in first]
    return table


# ------------------------------------------------------------------- semilocal cache
@dataclass(frozen=True)
class CacheEntry:
    """Partial score matrix of one symbol plus its dominance index and search breakpoints."""

    psm: PartialScoreMatrix
    index: DominanceIndex = field(repr=False)
    suffix_breaks: Tuple[int, ...] = field(repr=False)
    prefix_breaks: Tuple[int, ...] = field(repr=False)

    @classmethod
    def from_matrix(cls, psm: PartialScoreMatrix) -> "CacheEntry":
        m, n = psm.m, psm.n
        suffix = {m} | {min(max(x + m + 1, 0), m) for x, _ in psm.nonzeros}
        prefix = {0, m} | {min(max(m + n - y, 0), m) for _, y in psm.nonzeros}
        return cls(psm, build_index(psm), tuple(sorted(suffix)), tuple(sorted(prefix)))

    @property
    def m(self) -> int:
        return self.psm.m

    @property
    def n(self) -> int:
        return self.psm.n


SemilocalCache = Dict[int, CacheEntry]


def _entry_for(slp: Slp, pattern: str, cache: SemilocalCache, sym: int) -> CacheEntry:
    stmt = slp.statement(sym)
    if isinstance(stmt, Terminal):
        return CacheEntry.from_matrix(base_case(stmt.char, pattern))
    return CacheEntry.from_matrix(concat(cache[stmt.left].psm, cache[stmt.right].psm))


def build_semilocal_cache(slp: Slp, pattern: str, threads: int = 1) -> SemilocalCache:
    """Partial score matrix and index for every symbol reachable from the root.

    With ``threads > 1`` the symbols of each dependency level are built
    concurrently; the result does not depend on the thread count.
    """
    if not pattern:
        raise PatternError("pattern must be nonempty")
    symbols = sorted(slp.reachable())
    cache: SemilocalCache = {}
    with diagnostics.timed(f"semilocal cache for {len(symbols)} symbols, n={len(pattern)}"):
        if threads <= 1:
            for sym in symbols:
                cache[sym] = _entry_for(slp, pattern, cache, sym)
            return cache

        level: Dict[int, int] = {}
        for sym in symbols:
            stmt = slp.statement(sym)
            level[sym] = 0 if isinstance(stmt, Terminal) else 1 + max(level[stmt.left], level[stmt.right])
        layers: Dict[int, List[int]] = {}
        for sym in symbols:
            layers.setdefault(level[sym], []).append(sym)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for depth in sorted(layers):
                batch = layers[depth]
                entries = pool.map(lambda s: _entry_for(slp, pattern, cache, s), batch)
                for sym, entry in zip(batch, entries):
                    cache[sym] = entry
                diagnostics.debug(f"level {depth}: {len(batch)} symbols")
    return cache


# ------------------------------------------------------------------ entry searches
def shortest_suffix_containing(entry: CacheEntry, n_prefix: int) -> Optional[int]:
    """Length of the shortest suffix of the symbol containing ``pattern[:n_prefix]``, or None."""
    if not 1 <= n_prefix <= entry.n:
        raise QueryRangeError(f"pattern prefix length {n_prefix} outside [1, {entry.n}]")
    idx = entry.index
    if query_suffix_prefix(idx, entry.m, n_prefix) < n_prefix:
        return None
    breaks = entry.suffix_breaks
    lo, hi = 0, len(breaks) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if query_suffix_prefix(idx, breaks[mid], n_prefix) == n_prefix:
            hi = mid
        else:
            lo = mid + 1
    return breaks[lo]


def shortest_prefix_containing(entry: CacheEntry, j: int) -> Optional[int]:
    """Length of the shortest prefix of the symbol containing ``pattern[j:]``, or None."""
    n = entry.n
    if not 0 <= j <= n:
        raise QueryRangeError(f"pattern offset {j} outside [0, {n}]")
    if j == n:
        return 0
    idx = entry.index
    need = n - j
    if query_prefix_suffix(idx, entry.m, j) < need:
        return None
    breaks = entry.prefix_breaks
    lo, hi = 0, len(breaks) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if query_prefix_suffix(idx, breaks[mid], j) == need:
            hi = mid
        else:
            lo = mid + 1
    return breaks[lo]


def longest_prefix_in_suffix(entry: CacheEntry, length: int) -> int:
    """Largest q such that the suffix of ``length`` characters contains ``pattern[:q]``."""
    lo, hi = 0, entry.n
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if query_suffix_prefix(entry.index, length, mid) == mid:
            lo = mid
        else:
            hi = mid - 1
    return lo


def longest_suffix_in_prefix(entry: CacheEntry, length: int) -> int:
    """Largest q such that the prefix of ``length`` characters contains ``pattern[n-q:]``."""
    n = entry.n
    lo, hi = 0, n
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if query_prefix_suffix(entry.index, length, n - mid) == mid:
            lo = mid
        else:
            hi = mid - 1
    return lo


# ------------------------------------------------------------------------ recognizer
class WindowReport(NamedTuple):
    windows: List[Window]
    truncated: bool


class Recognizer:
    """One text (as an SLP) against one pattern.

    The jump table, the semilocal cache and the per-mode window counts are built
    lazily and kept, so several queries share one cache.
    """

    def __init__(self, slp: Slp, pattern: str, threads: int = 1) -> None:
        self.slp = slp
        self.pattern = pattern
        self.threads = threads
        self._jump: Optional[Dict[int, List[int]]] = None
        self._cache: Optional[SemilocalCache] = None
        self._boundary: Dict[int, List[Window]] = {}
        self._counts: Dict[Tuple[str, Optional[int]], Dict[int, int]] = {}
        self._fixed_classes: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}

    @property
    def n(self) -> int:
        return len(self.pattern)

    # -------------------------------------------------------------- global queries
    @property
    def jump_table(self) -> Dict[int, List[int]]:
        if self._jump is None:
            self._jump = build_jump_table(self.slp, self.pattern)
        return self._jump

    def prefix_length(self) -> int:
        return self.jump_table[self.slp.root][0]

    def contains(self) -> bool:
        return self.prefix_length() == self.n

    @property
    def cache(self) -> SemilocalCache:
        if self._cache is None:
            self._require_pattern()
            self._cache = build_semilocal_cache(self.slp, self.pattern, self.threads)
        return self._cache

    def root_entry(self) -> CacheEntry:
        return self.cache[self.slp.root]

    def lcs(self) -> int:
        return query_string_substring(self.root_entry().index, 0, self.n)

    # ------------------------------------------------------------------- counting
    def count(self, mode: str, w: Optional[int] = None) -> int:
        """Number of windows of the whole text for ``mode`` (``minimal``, ``fixed`` or ``bounded``)."""
        return self._symbol_counts(mode, w)[self.slp.root]

    def count_minimal(self) -> int:
        return self.count("minimal")

    def count_fixed(self, w: int) -> int:
        return self.count("fixed", w)

    def count_bounded(self, w: int) -> int:
        return self.count("bounded", w)

    def _require_pattern(self) -> None:
        if not self.pattern:
            raise PatternError("pattern must be nonempty")

    def _check_mode(self, mode: str, w: Optional[int]) -> Optional[int]:
        if mode not in MODES:
            raise QueryRangeError(f"unknown window mode {mode!r}; expected one of {', '.join(MODES)}")
        if mode == "minimal":
            return None
        if w is None or w < 1:
            raise QueryRangeError(f"{mode} windows need a width w >= 1")
        return w

    def _symbol_counts(self, mode: str, w: Optional[int]) -> Dict[int, int]:
        self._require_pattern()
        w = self._check_mode(mode, w)
        key = (mode, w)
        if key in self._counts:
            return self._counts[key]
        counts: Dict[int, int] = {}
        for sym in sorted(self.slp.reachable()):
            stmt = self.slp.statement(sym)
            if isinstance(stmt, Terminal):
                counts[sym] = self._terminal_count(stmt.char, mode, w)
                continue
            inner = counts[stmt.left] + counts[stmt.right]
            if mode == "fixed":
                assert w is not None
                if self.slp.length(sym) < w:
                    counts[sym] = 0
                    continue
                boundary = sum(b - a + 1 for a, b in self._fixed_episode_classes(sym, w))
            elif mode == "bounded":
                boundary = sum(1 for s, e in self._minimal_boundary(sym) if e - s <= w)
            else:
                boundary = len(self._minimal_boundary(sym))
            counts[sym] = inner + boundary
        self._counts[key] = counts
        return counts

    def _terminal_count(self, char: str, mode: str, w: Optional[int]) -> int:
        if self.n != 1 or self.pattern[0] != char:
            return 0
        return 1 if mode != "fixed" or w == 1 else 0

    # ------------------------------------------------------- minimal window split
    def _minimal_boundary(self, sym: int) -> List[Window]:
        """Minimal windows of ``sym`` that cross the split between its two children, by start."""
        if sym in self._boundary:
            return self._boundary[sym]
        stmt = self.slp.statement(sym)
        assert isinstance(stmt, Concat)
        left, right = self.cache[stmt.left], self.cache[stmt.right]
        split = left.m
        n = self.n

        candidates = set()
        for n_left in range(1, n):
            l_left = shortest_suffix_containing(left, n_left)
            if l_left is None:
                continue
            l_right = shortest_prefix_containing(right, n_left)
            if l_right is None:
                continue
            candidates.add((split - l_left, split + l_right))

        # a candidate sharing its start with a shorter one, or its end with a later-starting one, is not minimal
        shortest_end: Dict[int, int] = {}
        latest_start: Dict[int, int] = {}
        for s, e in candidates:
            shortest_end[s] = min(e, shortest_end.get(s, e))
            latest_start[e] = max(s, latest_start.get(e, s))
        survivors = sorted((s, e) for s, e in candidates if shortest_end[s] == e and latest_start[e] == s)

        windows = [(s, e) for s, e in survivors if self._is_minimal_across(left, right, s, e)]
        diagnostics.debug(
            f"symbol {sym}: {len(candidates)} boundary candidates, {len(windows)} minimal"
        )
        self._boundary[sym] = windows
        return windows

    def _is_minimal_across(self, left: CacheEntry, right: CacheEntry, start: int, end: int) -> bool:
        split = left.m
        return not (
            self._contains_across(left, right, split - start - 1, end - split)
            or self._contains_across(left, right, split - start, end - split - 1)
        )

    def _contains_across(self, left: CacheEntry, right: CacheEntry, left_len: int, right_len: int) -> bool:
        """Whether (suffix of ``left_len`` of left)(prefix of ``right_len`` of right) contains the pattern."""
        matched = longest_prefix_in_suffix(left, left_len)
        needed = shortest_prefix_containing(right, matched)
        return needed is not None and needed <= right_len

    # --------------------------------------------------------- fixed window split
    def _fixed_episode_classes(self, sym: int, w: int) -> List[Tuple[int, int]]:
        """Inclusive ranges of left widths w' whose boundary window of width w contains the pattern."""
        key = (sym, w)
        if key in self._fixed_classes:
            return self._fixed_classes[key]
        stmt = self.slp.statement(sym)
        assert isinstance(stmt, Concat)
        left, right = self.cache[stmt.left], self.cache[stmt.right]
        m_left, m_right, n = left.m, right.m, self.n
        lo, hi = max(1, w - m_right), min(w - 1, m_left)
        classes: List[Tuple[int, int]] = []
        if lo <= hi:
            breaks = {lo}
            for x, y in left.psm.nonzeros:
                if 0 <= y < n:
                    breaks.add(x + m_left + 1)
            for x, y in right.psm.nonzeros:
                if 0 <= x < n:
                    breaks.add(w - m_right - n + y + 1)
            starts = sorted(b for b in breaks if lo <= b <= hi)
            covered = 0
            for k, first in enumerate(starts):
                last = starts[k + 1] - 1 if k + 1 < len(starts) else hi
                covered += last - first + 1
                matched = longest_prefix_in_suffix(left, first) + longest_suffix_in_prefix(right, w - first)
                if matched >= n:
                    classes.append((first, last))
            assert covered == hi - lo + 1, "window classes do not partition the boundary range"
            diagnostics.debug(f"symbol {sym}, w={w}: {len(starts)} classes, {len(classes)} episodes")
        self._fixed_classes[key] = classes
        return classes

    # ------------------------------------------------------------------ reporting
    def iter_windows(self, mode: str, w: Optional[int] = None) -> Iterator[Window]:
        """All windows of ``mode`` as 0-based half-open pairs, ordered by start."""
        counts = self._symbol_counts(mode, w)
        return self._walk_windows(mode, self._check_mode(mode, w), counts)

    def _walk_windows(self, mode: str, w: Optional[int], counts: Dict[int, int]) -> Iterator[Window]:
        """In-order walk over symbols with nonzero counts.

        Frames are ``(sym, offset, expanded)``. Boundary windows of minimal and
        bounded modes wait in ``pending`` until the walk passes their start;
        fixed windows of one width have distinct starts and stream directly.
        """
        root = self.slp.root
        if counts[root] == 0:
            return
        pending: List[Window] = []
        stack: List[Tuple[int, int, bool]] = [(root, 0, False)]
        while stack:
            sym, offset, expanded = stack.pop()
            stmt = self.slp.statement(sym)
            if expanded:
                assert isinstance(stmt, Concat)
                split = offset + self.slp.length(stmt.left)
                if mode == "fixed":
                    assert w is not None
                    for first, last in reversed(self._fixed_episode_classes(sym, w)):
                        for start in range(split - last, split - first + 1):
                            yield (start, start + w)
                if counts[stmt.right]:
                    stack.append((stmt.right, split, False))
                continue
            while pending and pending[0][0] < offset:
                yield heapq.heappop(pending)
            if isinstance(stmt, Terminal):
                yield (offset, offset + 1)
                continue
            if mode != "fixed":
                for s, e in self._minimal_boundary(sym):
                    if mode == "minimal" or e - s <= (w or 0):
                        heapq.heappush(pending, (offset + s, offset + e))
            stack.append((sym, offset, True))
            if counts[stmt.left]:
                stack.append((stmt.left, offset, False))
        while pending:
            yield heapq.heappop(pending)

    def report(self, mode: str, limit: int, w: Optional[int] = None) -> WindowReport:
        if limit < 1:
            raise QueryRangeError("report limit must be at least 1")
        found = list(islice(self.iter_windows(mode, w), limit + 1))
        windows = [(s + 1, e) for s, e in found[:limit]]
        return WindowReport(windows, len(found) > limit)


# -------------------------------------------------------------- functional surface
def global_longest_prefix(slp: Slp, pattern: str) -> int:
    return Recognizer(slp, pattern).prefix_length()


def contains(slp: Slp, pattern: str) -> bool:
    return Recognizer(slp, pattern).contains()


def lcs(slp: Slp, pattern: str, threads: int = 1) -> int:
    return Recognizer(slp, pattern, threads).lcs()


def count_minimal_windows(slp: Slp, pattern: str, threads: int = 1) -> int:
    return Recognizer(slp, pattern, threads).count_minimal()


def count_fixed_windows(slp: Slp, pattern: str, w: int, threads: int = 1) -> int:
    return Recognizer(slp, pattern, threads).count_fixed(w)


def count_bounded_minimal(slp: Slp, pattern: str, w: int, threads: int = 1) -> int:
    return Recognizer(slp, pattern, threads).count_bounded(w)


def report_windows(
    slp: Slp, pattern: str, mode: str = "minimal", limit: int = 10, w: Optional[int] = None
) -> WindowReport:
    return Recognizer(slp, pattern).report(mode, limit, w)
