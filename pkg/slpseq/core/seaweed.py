"""Permutation-matrix algebra behind highest-score matrix composition.

A permutation over half-integer indices ``<0:N>`` is stored in rank space: row
``r + 1/2`` maps to column ``row_to_col[r] + 1/2``.  Its distribution matrix is

    d(i0, j0) = #{(r, c) : r >= i0 and c < j0}        0 <= i0, j0 <= N

and the product of two permutations is the permutation whose distribution
matrix is the (min,+) product of the operands' distribution matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, NamedTuple, Sequence, Tuple

import numpy as np

from ..errors import DuplicateCoordinateError, QueryRangeError, SizeMismatchError


@dataclass(frozen=True)
class SeaweedPerm:
    """A finite permutation matrix, row rank -> column rank."""

    row_to_col: Tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.row_to_col) != list(range(len(self.row_to_col))):
            raise ValueError("row_to_col is not a permutation of 0..N-1")

    @property
    def size(self) -> int:
        return len(self.row_to_col)

    @classmethod
    def identity(cls, size: int) -> "SeaweedPerm":
        return cls(tuple(range(size)))

    @classmethod
    def reversal(cls, size: int) -> "SeaweedPerm":
        return cls(tuple(range(size - 1, -1, -1)))

    def inverse(self) -> "SeaweedPerm":
        inv = [0] * self.size
        for r, c in enumerate(self.row_to_col):
            inv[c] = r
        return SeaweedPerm(tuple(inv))

    def nonzeros(self) -> List[Tuple[int, int]]:
        return list(enumerate(self.row_to_col))


class RankedPerm(NamedTuple):
    """Rank-space permutation plus the sorted original coordinates of its rows and columns."""

    perm: SeaweedPerm
    rows: Tuple[int, ...]
    cols: Tuple[int, ...]

    def expand(self, perm: SeaweedPerm) -> List[Tuple[int, int]]:
        """Map a permutation over the same ranks back to original coordinates."""
        return [(self.rows[r], self.cols[c]) for r, c in enumerate(perm.row_to_col)]


def dist_value(perm: SeaweedPerm, i0: int, j0: int) -> int:
    """Number of nonzeros (r, c) with r >= i0 and c < j0; a linear scan."""
    n = perm.size
    if not (0 <= i0 <= n and 0 <= j0 <= n):
        raise QueryRangeError(f"distribution index ({i0}, {j0}) outside [0, {n}]")
    return sum(1 for r, c in enumerate(perm.row_to_col) if r >= i0 and c < j0)


def compress_ranks(points: Sequence[Tuple[int, int]]) -> RankedPerm:
    """Rank-compress points with distinct first and distinct second components.

    Coordinates may be arbitrarily large ints; only their order matters.
    """
    xs = sorted(x for x, _ in points)
    ys = sorted(y for _, y in points)
    for values, axis in ((xs, "first"), (ys, "second")):
        for a, b in zip(values, values[1:]):
            if a == b:
                raise DuplicateCoordinateError(f"duplicate {axis} coordinate {a}")
    col_rank = {y: rank for rank, y in enumerate(ys)}
    ordered = sorted(points)
    perm = SeaweedPerm(tuple(col_rank[y] for _, y in ordered))
    return RankedPerm(perm, tuple(xs), tuple(ys))


# ------------------------------------------------------------------ dense reference
def dist_matrix(perm: SeaweedPerm) -> np.ndarray:
    """Dense (N+1) x (N+1) distribution matrix."""
    n = perm.size
    density = np.zeros((n, n), dtype=np.int64)
    if n:
        density[np.arange(n), np.asarray(perm.row_to_col)] = 1
    prefix = np.zeros((n, n + 1), dtype=np.int64)
    prefix[:, 1:] = np.cumsum(density, axis=1)
    dist = np.zeros((n + 1, n + 1), dtype=np.int64)
    if n:
        dist[:n] = np.cumsum(prefix[::-1], axis=0)[::-1]
    return dist


def density(dist: np.ndarray) -> SeaweedPerm:
    """Recover a permutation from its distribution matrix by the 2x2 stencil."""
    cells = dist[:-1, 1:] - dist[:-1, :-1] - dist[1:, 1:] + dist[1:, :-1]
    n = cells.shape[0]
    assert ((cells == 0) | (cells == 1)).all(), "stencil produced a non-0/1 cell"
    rows, cols = np.nonzero(cells)
    assert len(rows) == n, "stencil is not a permutation"
    row_to_col = [0] * n
    for r, c in zip(rows.tolist(), cols.tolist()):
        row_to_col[r] = c
    return SeaweedPerm(tuple(row_to_col))


def mul_dist_oracle(pa: SeaweedPerm, pb: SeaweedPerm) -> SeaweedPerm:
    """Reference product: explicit (min,+) over dense distribution matrices, O(N^3)."""
    if pa.size != pb.size:
        raise SizeMismatchError(f"cannot multiply sizes {pa.size} and {pb.size}")
    n = pa.size
    if n == 0:
        return SeaweedPerm(())
    da = dist_matrix(pa)
    db = dist_matrix(pb)
    dc = np.empty_like(da)
    for i in range(n + 1):
        dc[i] = (da[i][:, None] + db).min(axis=0)
    return density(dc)


# ------------------------------------------------------------------- fast product
def mul_dist_fast(pa: SeaweedPerm, pb: SeaweedPerm) -> SeaweedPerm:
    """Same product as :func:`mul_dist_oracle` in O(N log N) time and O(N) memory per level.

    Divide and conquer on the shared middle index: the low and high halves are
    multiplied recursively, then a single staircase walk decides which half wins
    each output cell.
    """
    if pa.size != pb.size:
        raise SizeMismatchError(f"cannot multiply sizes {pa.size} and {pb.size}")
    return SeaweedPerm(tuple(_multiply(list(pa.row_to_col), list(pb.row_to_col))))


def _multiply(p: List[int], q: List[int]) -> List[int]:
    n = len(p)
    if n <= 1:
        return [0] * n
    h = n // 2

    lo_rows = [i for i in range(n) if p[i] < h]
    hi_rows = [i for i in range(n) if p[i] >= h]
    col_is_lo = [False] * n
    for j in range(h):
        col_is_lo[q[j]] = True
    lo_cols = [k for k in range(n) if col_is_lo[k]]
    hi_cols = [k for k in range(n) if not col_is_lo[k]]
    col_rank = [0] * n
    for rank, k in enumerate(lo_cols):
        col_rank[k] = rank
    for rank, k in enumerate(hi_cols):
        col_rank[k] = rank

    sub_lo = _multiply([p[i] for i in lo_rows], [col_rank[q[j]] for j in range(h)])
    sub_hi = _multiply([p[i] - h for i in hi_rows], [col_rank[q[j]] for j in range(h, n)])

    row_col = [0] * n
    col_row = [0] * n
    row_is_lo = [False] * n
    for r, c in enumerate(sub_lo):
        i, k = lo_rows[r], lo_cols[c]
        row_col[i], col_row[k], row_is_lo[i] = k, i, True
    for r, c in enumerate(sub_hi):
        i, k = hi_rows[r], hi_cols[c]
        row_col[i], col_row[k] = k, i

    below = _staircase(n, row_col, row_is_lo, col_row, col_is_lo, 0)
    negative = _staircase(n, row_col, row_is_lo, col_row, col_is_lo, -1)

    out = [0] * n
    for i in range(n):
        c = row_col[i]
        if row_is_lo[i]:
            keep = c + 1 < negative[i]
        else:
            keep = c >= below[i]
        out[i] = c if keep else below[i] - 1
    return out


def _staircase(
    n: int,
    row_col: List[int],
    row_is_lo: List[bool],
    col_row: List[int],
    col_is_lo: List[bool],
    threshold: int,
) -> List[int]:
    """For each row strip i, the least k with delta(i, k) <= threshold (n + 1 if none).

    delta(i, k) = H(i, k) - L(i, k) is the high-half minus low-half candidate value
    at grid point (i, k).  It is nonincreasing in both i and k with unit steps, so the
    boundary is a monotone staircase walked right-to-left as i grows.
    """
    result = [0] * n
    k = n + 1
    delta = 0
    hi_above = 0
    for i in range(n):
        # delta(i, n) = -(number of high-half rows above i)
        if k > n and -hi_above <= threshold:
            k, delta = n, -hi_above
        if k <= n:
            while k > 0:
                c = k - 1
                r = col_row[c]
                left = delta + ((r >= i) if col_is_lo[c] else (r < i))
                if left > threshold:
                    break
                k, delta = c, left
            c = row_col[i]
            result[i] = k
            delta -= (c >= k) if row_is_lo[i] else (c < k)
        else:
            result[i] = k
        if not row_is_lo[i]:
            hi_above += 1
    return result
