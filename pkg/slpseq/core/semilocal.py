"""Partial implicit highest-score matrices of a text string against a pattern.

Coordinates follow the rank convention of :mod:`slpseq.core.seaweed`: a nonzero at
half-integer position ``(x + 1/2, y + 1/2)`` is stored as the integer pair
``(x, y)``.  For a text of length ``m`` against a pattern of length ``n`` every
nonzero of the full matrix satisfies ``-m <= x < n`` and ``0 <= y < m + n``; the
partial representation keeps those with ``0 <= x < n`` or ``0 <= y < n``.
Coordinates grow with ``m`` and are plain Python ints.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from heapq import merge
from typing import Iterable, List, Tuple

from ..errors import PatternError, QueryRangeError, SizeMismatchError, SlpFormatError
from .seaweed import compress_ranks, mul_dist_fast

Point = Tuple[int, int]


@dataclass(frozen=True)
class PartialScoreMatrix:
    """Nonzeros of the extended highest-score matrix with a coordinate inside the pattern range."""

    m: int
    n: int
    nonzeros: Tuple[Point, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "nonzeros", tuple(sorted(self.nonzeros)))

    def canonical(self) -> Tuple[Point, ...]:
        return self.nonzeros

    def check(self) -> None:
        """Assert the structural invariants; used by tests and ``selfcheck``."""
        m, n = self.m, self.n
        xs = [x for x, _ in self.nonzeros]
        ys = [y for _, y in self.nonzeros]
        assert n <= len(self.nonzeros) <= 2 * n, "nonzero count outside [n, 2n]"
        assert len(set(xs)) == len(xs) and len(set(ys)) == len(ys), "repeated coordinate"
        for x, y in self.nonzeros:
            assert -m <= x < n and 0 <= y < m + n, f"nonzero {(x, y)} outside the core"
            # a single character keeps its whole core, boundary nonzero included
            assert m == 1 or 0 <= x < n or 0 <= y < n, f"nonzero {(x, y)} is not partial"
            assert x <= y, f"nonzero {(x, y)} below the diagonal"
        assert sorted(x for x in xs if 0 <= x < n) == list(range(n)), "pattern row missing"
        assert sorted(y for y in ys if 0 <= y < n) == list(range(n)), "pattern column missing"


def base_case(char: str, pattern: str) -> PartialScoreMatrix:
    """Matrix of a single text character against ``pattern`` (a simple scan)."""
    n = len(pattern)
    if n == 0:
        raise PatternError("pattern must be nonempty")
    nonzeros: List[Point] = []
    previous = -1
    for q, ch in enumerate(pattern):
        if ch == char:
            nonzeros.append((previous, q))
            previous = q
        else:
            nonzeros.append((q, q))
    nonzeros.append((previous, n))
    return PartialScoreMatrix(1, n, tuple(nonzeros))


def concat(a: PartialScoreMatrix, b: PartialScoreMatrix) -> PartialScoreMatrix:
    """Matrix of the concatenated text T'T'' from the matrices of T' (``a``) and T'' (``b``).

    Nonzeros of ``a`` leaving through the bottom right of the pattern range and
    nonzeros of ``b`` entering from the top left pass through with shifted
    coordinates; the ``n`` middle nonzeros of each side are composed by a
    permutation product.
    """
    if a.n != b.n:
        raise SizeMismatchError(f"pattern lengths differ: {a.n} and {b.n}")
    n = a.n
    m_left, m_right = a.m, b.m

    # a's middle columns and b's middle rows are both exactly 0..n-1
    left = compress_ranks([(x, y) for x, y in a.nonzeros if 0 <= y < n])
    right = compress_ranks([(x, y) for x, y in b.nonzeros if 0 <= x < n])
    product = mul_dist_fast(left.perm, right.perm)

    out: List[Point] = [
        (x, y) for x, y in left._replace(cols=right.cols).expand(product) if 0 <= x < n or 0 <= y < n
    ]
    out.extend((x, y + m_right) for x, y in a.nonzeros if y >= n and 0 <= x < n)
    out.extend((x - m_left, y) for x, y in b.nonzeros if x < 0 and 0 <= y < n)
    return PartialScoreMatrix(m_left + m_right, n, tuple(out))


class DominanceIndex:
    """Static dominance counter: ``count(i0, j0) = #{(x, y) : x >= i0 and y < j0}``.

    A merge-sort tree over the nonzeros ordered by ``x``; every node keeps the
    sorted ``y`` values of its range, so a query visits O(log n) nodes and
    bisects each.
    """

    def __init__(self, psm: PartialScoreMatrix) -> None:
        self.psm = psm
        points = sorted(psm.nonzeros)
        self._xs = [x for x, _ in points]
        size = 1
        while size < max(1, len(points)):
            size *= 2
        self._size = size
        tree: List[List[int]] = [[] for _ in range(2 * size)]
        for k, (_, y) in enumerate(points):
            tree[size + k] = [y]
        for v in range(size - 1, 0, -1):
            tree[v] = list(merge(tree[2 * v], tree[2 * v + 1]))
        self._tree = tree

    @property
    def m(self) -> int:
        return self.psm.m

    @property
    def n(self) -> int:
        return self.psm.n

    def count(self, i0: int, j0: int) -> int:
        lo = bisect_left(self._xs, i0) + self._size
        hi = len(self._xs) + self._size
        total = 0
        while lo < hi:
            if lo & 1:
                total += bisect_left(self._tree[lo], j0)
                lo += 1
            if hi & 1:
                hi -= 1
                total += bisect_left(self._tree[hi], j0)
            lo >>= 1
            hi >>= 1
        return total


def build_index(psm: PartialScoreMatrix) -> DominanceIndex:
    return DominanceIndex(psm)


# -------------------------------------------------------------------------- queries
def query_string_substring(idx: DominanceIndex, j: int, j_end: int) -> int:
    """LCS of the whole text against ``pattern[j:j_end]``."""
    if not 0 <= j <= j_end <= idx.n:
        raise QueryRangeError(f"need 0 <= j <= j' <= {idx.n}, got j={j}, j'={j_end}")
    return j_end - j - idx.count(j, j_end)


def query_suffix_prefix(idx: DominanceIndex, length: int, j_end: int) -> int:
    """LCS of the text suffix of ``length`` characters against ``pattern[:j_end]``."""
    if not 0 <= length <= idx.m:
        raise QueryRangeError(f"suffix length {length} outside [0, {idx.m}]")
    if not 0 <= j_end <= idx.n:
        raise QueryRangeError(f"pattern prefix {j_end} outside [0, {idx.n}]")
    return j_end - idx.count(length - idx.m, j_end)


def query_prefix_suffix(idx: DominanceIndex, length: int, j: int) -> int:
    """LCS of the text prefix of ``length`` characters against ``pattern[j:]``."""
    if not 0 <= length <= idx.m:
        raise QueryRangeError(f"prefix length {length} outside [0, {idx.m}]")
    if not 0 <= j <= idx.n:
        raise QueryRangeError(f"pattern offset {j} outside [0, {idx.n}]")
    return idx.n - j - idx.count(j, idx.m + idx.n - length)


# ----------------------------------------------------------------------- debug dump
def dump_nonzeros(psm: PartialScoreMatrix) -> str:
    """One ``2x+1,2y+1`` line per nonzero (doubled half-integers), sorted."""
    return "".join(f"{2 * x + 1},{2 * y + 1}\n" for x, y in psm.nonzeros)


def parse_dump(text: Iterable[str] | str) -> List[Point]:
    lines = text.splitlines() if isinstance(text, str) else text
    points: List[Point] = []
    for line_number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            left, right = (int(part) for part in line.split(","))
        except ValueError as exc:
            raise SlpFormatError(f"expected '<int>,<int>', got {line!r}", line_number) from exc
        if left % 2 == 0 or right % 2 == 0:
            raise SlpFormatError(f"doubled coordinates must be odd, got {line!r}", line_number)
        points.append(((left - 1) // 2, (right - 1) // 2))
    return sorted(points)
