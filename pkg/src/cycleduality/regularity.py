"""Exact rational matrices, determinants, and regularity tests.

Rational arithmetic is stdlib fractions.Fraction throughout.  A matrix is
totally unimodular when every square submatrix has determinant in
{-1, 0, 1}, and k-regular when k times the inverse of every nonsingular
square submatrix is integral; for integral matrices 1-regular and totally
unimodular coincide.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import comb, lcm
from typing import Optional, Sequence, Union

from . import kernels

__all__ = [
    "Rational",
    "RationalMatrix",
    "det",
    "is_totally_unimodular",
    "is_k_regular",
]

Rational = Fraction
Entry = Union[int, Fraction]


class RationalMatrix:
    """Immutable dense matrix of Fractions."""

    def __init__(self, entries: Sequence[Sequence[Entry]]):
        self.entries: tuple[tuple[Fraction, ...], ...] = tuple(
            tuple(Fraction(x) for x in row) for row in entries
        )
        self.nrows = len(self.entries)
        self.ncols = len(self.entries[0]) if self.nrows else 0
        for row in self.entries:
            if len(row) != self.ncols:
                raise ValueError("ragged rows")

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def vstack(cls, *parts: "RationalMatrix") -> "RationalMatrix":
        ncols = {p.ncols for p in parts if p.nrows}
        if len(ncols) > 1:
            raise ValueError("column counts differ")
        rows: list[Sequence[Fraction]] = []
        for p in parts:
            rows.extend(p.entries)
        return cls(rows)

    def scale(self, factor: Entry) -> "RationalMatrix":
        f = Fraction(factor)
        return RationalMatrix([[x * f for x in row] for row in self.entries])

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            [[self.entries[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix(
            [[self.entries[i][j] for j in cols] for i in rows]
        )

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.entries for x in row)

    def int_rows(self) -> list[list[int]]:
        if not self.is_integral():
            raise ValueError("matrix is not integral")
        return [[int(x) for x in row] for row in self.entries]

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.entries == other.entries

    def __repr__(self):
        return f"RationalMatrix({self.nrows}x{self.ncols})"


MatrixLike = Union[RationalMatrix, Sequence[Sequence[Entry]]]


def _as_matrix(m: MatrixLike) -> RationalMatrix:
    return m if isinstance(m, RationalMatrix) else RationalMatrix(m)


def det(matrix: MatrixLike) -> Fraction:
    """Exact determinant; rows are cleared to integers first."""
    m = _as_matrix(matrix)
    if m.nrows != m.ncols:
        raise ValueError("determinant needs a square matrix")
    if m.nrows == 0:
        return Fraction(1)
    scale = Fraction(1)
    int_rows = []
    for row in m.entries:
        mult = lcm(*(x.denominator for x in row))
        scale *= mult
        int_rows.append([int(x * mult) for x in row])
    return Fraction(kernels.det_bareiss(int_rows), 1) / scale


def _square_index_pairs(nrows, ncols, order_cap):
    top = min(nrows, ncols) if order_cap is None else min(nrows, ncols, order_cap)
    for k in range(1, top + 1):
        for ridx in itertools.combinations(range(nrows), k):
            for cidx in itertools.combinations(range(ncols), k):
                yield ridx, cidx


def is_totally_unimodular(matrix: MatrixLike, max_order: Optional[int] = None) -> bool:
    """Exhaustive minor check up to max_order (all orders when None)."""
    m = _as_matrix(matrix)
    if not m.is_integral():
        return False
    rows = m.int_rows()
    for row in rows:
        for x in row:
            if x not in (-1, 0, 1):
                return False
    top = min(m.nrows, m.ncols) if max_order is None else min(m.nrows, m.ncols, max_order)
    for k in range(2, top + 1):
        for ridx in itertools.combinations(range(m.nrows), k):
            sub_rows = [rows[i] for i in ridx]
            for cidx in itertools.combinations(range(m.ncols), k):
                d = kernels.det_bareiss([[r[j] for j in cidx] for r in sub_rows])
                if d not in (-1, 0, 1):
                    return False
    return True


def _inverse(entries: Sequence[Sequence[Fraction]]) -> Optional[list[list[Fraction]]]:
    n = len(entries)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(entries)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if aug[r][col] != 0:
                piv = r
                break
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def is_k_regular(
    matrix: MatrixLike,
    k: int,
    max_order: Optional[int] = None,
    max_checks: Optional[int] = None,
    seed: int = 0,
) -> bool:
    """Check k * R^-1 integral for nonsingular square submatrices R.

    Exhaustive over all orders up to ``max_order`` unless the submatrix
    count exceeds ``max_checks``; then that many submatrices are drawn by
    a seeded sampler instead (documented cap for large inputs).
    """
    m = _as_matrix(matrix)
    top = min(m.nrows, m.ncols) if max_order is None else min(m.nrows, m.ncols, max_order)
    total = sum(comb(m.nrows, r) * comb(m.ncols, r) for r in range(1, top + 1))
    if max_checks is not None and total > max_checks:
        rng = random.Random(seed)
        for _ in range(max_checks):
            order = rng.randint(1, top)
            ridx = sorted(rng.sample(range(m.nrows), order))
            cidx = sorted(rng.sample(range(m.ncols), order))
            if not _submatrix_k_regular(m, ridx, cidx, k):
                return False
        return True
    for ridx, cidx in _square_index_pairs(m.nrows, m.ncols, top):
        if not _submatrix_k_regular(m, ridx, cidx, k):
            return False
    return True


def _submatrix_k_regular(m: RationalMatrix, ridx, cidx, k: int) -> bool:
    sub = [[m.entries[i][j] for j in cidx] for i in ridx]
    inv = _inverse(sub)
    if inv is None:
        return True
    for row in inv:
        for x in row:
            if (k * x).denominator != 1:
                return False
    return True
