"""GF(2) matrices stored as one integer bitmask per row."""

from __future__ import annotations

from typing import Optional, Sequence

from . import kernels

__all__ = ["GF2Matrix", "gf2_rank", "gf2_bases", "gf2_solve"]


class GF2Matrix:
    """A 0/1 matrix over GF(2); row i has bit j set iff entry (i, j) is 1."""

    def __init__(self, nrows: int, ncols: int, rows: Sequence[int]):
        if len(rows) != nrows:
            raise ValueError(f"expected {nrows} rows, got {len(rows)}")
        mask = (1 << ncols) - 1
        for r in rows:
            if r & ~mask:
                raise ValueError("row has bits outside the column range")
        self.nrows = nrows
        self.ncols = ncols
        self.rows = list(rows)

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[int]]) -> "GF2Matrix":
        nrows = len(entries)
        ncols = len(entries[0]) if nrows else 0
        rows = []
        for row in entries:
            if len(row) != ncols:
                raise ValueError("ragged rows")
            bits = 0
            for j, x in enumerate(row):
                if x & 1:
                    bits |= 1 << j
            rows.append(bits)
        return cls(nrows, ncols, rows)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def transpose(self) -> "GF2Matrix":
        rows = [0] * self.ncols
        for i, r in enumerate(self.rows):
            while r:
                low = r & -r
                rows[low.bit_length() - 1] |= 1 << i
                r ^= low
        return GF2Matrix(self.ncols, self.nrows, rows)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "GF2Matrix":
        cols = list(col_idx)
        rows = []
        for i in row_idx:
            src = self.rows[i]
            bits = 0
            for jj, j in enumerate(cols):
                if (src >> j) & 1:
                    bits |= 1 << jj
            rows.append(bits)
        return GF2Matrix(len(rows), len(cols), rows)

    def __eq__(self, other):
        return (
            isinstance(other, GF2Matrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"GF2Matrix({self.nrows}x{self.ncols})"


def gf2_rank(matrix: GF2Matrix) -> int:
    rank, _, _ = kernels.gf2_eliminate(matrix.rows, matrix.ncols)
    return rank


def gf2_bases(matrix: GF2Matrix) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """Rank plus index sets of a row basis and a column basis.

    The submatrix on (row basis) x (column basis) is nonsingular: the
    pivot rows and pivot columns of the elimination.
    """
    rank, rbasis, cbasis = kernels.gf2_eliminate(matrix.rows, matrix.ncols)
    return rank, tuple(rbasis), tuple(cbasis)


def gf2_solve(matrix: GF2Matrix, rhs: Sequence[int]) -> Optional[tuple[int, ...]]:
    """A solution x of M x = rhs over GF(2), or None if inconsistent.

    Free variables are fixed to 0, so the answer is deterministic.
    """
    if len(rhs) != matrix.nrows:
        raise ValueError("rhs length must equal the row count")
    packed = 0
    for i, b in enumerate(rhs):
        if b & 1:
            packed |= 1 << i
    x = kernels.gf2_solve_bits(matrix.rows, matrix.ncols, packed)
    if x < 0:
        return None
    return tuple((x >> j) & 1 for j in range(matrix.ncols))
