"""Exact linear programming over the rationals.

Standard form here: maximize objective . x subject to matrix @ x <= rhs
and x >= 0.  The simplex tableau is kept fraction-free: rows and the
objective are first cleared to integers, then every pivot rewrites the
integer tableau by cross-multiplication and an exact division by the
previous pivot, with one shared positive denominator (the current basis
determinant).  Bland's smallest-index rule picks entering and leaving
variables, which makes the walk finite and fully deterministic.

Two dual routes are exposed on purpose and cross-checked by callers:
``solve`` reports the complementary (tableau) dual of the optimal basis,
while ``solve_dual_basic`` independently optimizes the explicit dual
program and returns a vertex of the dual polyhedron.  Every solve ends
with an exact feasibility / strong-duality self-check.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

from .regularity import RationalMatrix

__all__ = ["LinearProgram", "LPSolution", "solve", "solve_dual_basic"]

_MAX_PIVOTS = 50_000


@dataclasses.dataclass(frozen=True)
class LinearProgram:
    """max objective.x  s.t.  matrix @ x <= rhs,  x >= 0."""

    matrix: RationalMatrix
    rhs: tuple[Fraction, ...]
    objective: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.rhs) != self.matrix.nrows:
            raise ValueError("rhs length must match the row count")
        if len(self.objective) != self.matrix.ncols:
            raise ValueError("objective length must match the column count")


@dataclasses.dataclass(frozen=True)
class LPSolution:
    """Exact optimum: primal vector, tableau dual vector, defining bases.

    ``primal_basis`` lists the basic variable indices of the final
    tableau (structural variables first, then one slack per row).  The
    complementary dual vertex is determined by the same basis, so
    ``dual_basis`` equals it; both are exposed to make that explicit.
    """

    status: str  # "optimal" | "infeasible" | "unbounded"
    primal: tuple[Fraction, ...]
    dual: tuple[Fraction, ...]
    objective: Optional[Fraction]
    primal_basis: tuple[int, ...]
    dual_basis: tuple[int, ...]
    pivots: int


def _clear_denominators(lp: LinearProgram):
    """Scale rows and objective to integers; keep the factors for undoing."""
    a_rows: list[list[int]] = []
    b_int: list[int] = []
    row_scale: list[int] = []
    for i in range(lp.matrix.nrows):
        row = lp.matrix.entries[i]
        mult = lcm(lp.rhs[i].denominator, *(x.denominator for x in row)) if row else lp.rhs[i].denominator
        a_rows.append([int(x * mult) for x in row])
        b_int.append(int(lp.rhs[i] * mult))
        row_scale.append(mult)
    obj_scale = lcm(*(x.denominator for x in lp.objective)) if lp.objective else 1
    c_int = [int(x * obj_scale) for x in lp.objective]
    return a_rows, b_int, c_int, row_scale, obj_scale


class _Tableau:
    """Integer simplex tableau with a common positive denominator."""

    def __init__(self, a_rows: list[list[int]], b: list[int], c: list[int]):
        self.n = len(c)
        self.m = len(a_rows)
        self.c = c
        self.orig_row: list[int] = list(range(self.m))
        negate = [bi < 0 for bi in b]
        art_of_row: dict[int, int] = {}
        nart = 0
        for i in range(self.m):
            if negate[i]:
                art_of_row[i] = nart
                nart += 1
        self.nart = nart
        self.core = self.n + self.m  # structural + slack columns
        width = self.core + nart + 1
        self.rhs_col = width - 1
        self.rows: list[list[int]] = []
        self.basis: list[int] = []
        for i in range(self.m):
            row = [0] * width
            sign = -1 if negate[i] else 1
            for j, v in enumerate(a_rows[i]):
                row[j] = sign * v
            row[self.n + i] = sign
            row[self.rhs_col] = sign * b[i]
            if negate[i]:
                row[self.core + art_of_row[i]] = 1
                self.basis.append(self.core + art_of_row[i])
            else:
                self.basis.append(self.n + i)
            self.rows.append(row)
        self.d = 1
        self.pivots = 0
        self.dropped: list[int] = []

    # -- pivoting ----------------------------------------------------------

    def _pivot(self, r: int, col: int, objs: list[list[int]]):
        rows = self.rows
        p = rows[r][col]
        d = self.d
        prow = rows[r]
        for i in range(len(rows)):
            if i == r:
                continue
            row = rows[i]
            f = row[col]
            if f == 0 and p == d:
                continue
            for j in range(len(row)):
                row[j] = (row[j] * p - f * prow[j]) // d
        for obj in objs:
            f = obj[col]
            for j in range(len(obj)):
                obj[j] = (obj[j] * p - f * prow[j]) // d
        self.d = p
        self.basis[r] = col
        self.pivots += 1
        if self.pivots > _MAX_PIVOTS:
            raise RuntimeError("simplex pivot limit exceeded")

    def _optimize(self, obj: list[int], extra_objs: list[list[int]], allowed: int) -> str:
        """Pivot until obj has no negative reduced cost among cols < allowed."""
        rows = self.rows
        while True:
            col = -1
            for j in range(allowed):
                if obj[j] < 0:
                    col = j
                    break
            if col < 0:
                return "optimal"
            best = -1
            for i in range(len(rows)):
                t = rows[i][col]
                if t <= 0:
                    continue
                if best < 0:
                    best = i
                    continue
                lhs = rows[i][self.rhs_col] * rows[best][col]
                rhs = rows[best][self.rhs_col] * rows[i][col]
                if lhs < rhs or (lhs == rhs and self.basis[i] < self.basis[best]):
                    best = i
            if best < 0:
                return "unbounded"
            self._pivot(best, col, [obj] + extra_objs)

    # -- phases ------------------------------------------------------------

    def run_phase1(self) -> bool:
        """Drive artificials to zero; False means the program is infeasible."""
        if self.nart == 0:
            return True
        width = self.rhs_col + 1
        w = [0] * width
        art_rows = [i for i in range(self.m) if self.basis[i] >= self.core]
        for j in range(width):
            w[j] = -sum(self.rows[i][j] for i in art_rows)
            if self.core <= j < self.core + self.nart:
                w[j] += 1
        # artificials may leave but never re-enter: any truly feasible point
        # has them at zero, so optimality over the other columns is enough
        status = self._optimize(w, [], self.core)
        if status != "optimal" or w[self.rhs_col] < 0:
            return False
        # pivot lingering artificials out of the basis, dropping redundant rows
        r = 0
        while r < len(self.rows):
            if self.basis[r] < self.core:
                r += 1
                continue
            col = -1
            for j in range(self.core):
                if self.rows[r][j] != 0:
                    col = j
                    break
            if col < 0:
                self.dropped.append(self.orig_row[r])
                del self.rows[r]
                del self.basis[r]
                del self.orig_row[r]
                continue
            if self.rows[r][col] < 0:
                self.rows[r] = [-x for x in self.rows[r]]
            self._pivot(r, col, [])
            r += 1
        # slice the artificial columns away; slack indices are unaffected
        for row in self.rows:
            del row[self.core : self.core + self.nart]
        self.rhs_col = self.core
        return True

    def run_phase2(self) -> str:
        c_at = lambda v: self.c[v] if v < self.n else 0
        width = self.rhs_col + 1
        z = [0] * width
        for j in range(width):
            z[j] = sum(c_at(self.basis[i]) * self.rows[i][j] for i in range(len(self.rows)))
            if j < self.rhs_col:
                z[j] -= self.d * c_at(j)
        self.z = z
        return self._optimize(z, [], self.core)


def solve(lp: LinearProgram) -> LPSolution:
    """Optimize exactly; returns primal and complementary-dual vertices."""
    a_rows, b_int, c_int, row_scale, obj_scale = _clear_denominators(lp)
    tab = _Tableau(a_rows, b_int, c_int)
    if not tab.run_phase1():
        return LPSolution("infeasible", (), (), None, (), (), tab.pivots)
    status = tab.run_phase2()
    if status == "unbounded":
        return LPSolution("unbounded", (), (), None, (), (), tab.pivots)
    n, m = tab.n, tab.m
    x = [Fraction(0)] * n
    for r, v in enumerate(tab.basis):
        if v < n:
            x[v] = Fraction(tab.rows[r][tab.rhs_col], tab.d)
    y = [Fraction(0)] * m
    for i in range(m):
        if i in tab.dropped:
            continue
        y[i] = Fraction(tab.z[n + i], tab.d) * row_scale[i] / obj_scale
    objective = sum((ci * xi for ci, xi in zip(lp.objective, x)), Fraction(0))
    _verify(lp, x, y, objective)
    basis = tuple(sorted(tab.basis))
    return LPSolution("optimal", tuple(x), tuple(y), objective, basis, basis, tab.pivots)


def _verify(lp: LinearProgram, x, y, objective):
    """Exact feasibility and strong-duality check; failure is a solver bug."""
    m, n = lp.matrix.nrows, lp.matrix.ncols
    ent = lp.matrix.entries
    for xi in x:
        if xi < 0:
            raise RuntimeError("negative primal component")
    for i in range(m):
        lhs = sum((ent[i][j] * x[j] for j in range(n)), Fraction(0))
        if lhs > lp.rhs[i]:
            raise RuntimeError("primal infeasibility in reported optimum")
    for yi in y:
        if yi < 0:
            raise RuntimeError("negative dual component")
    for j in range(n):
        lhs = sum((ent[i][j] * y[i] for i in range(m)), Fraction(0))
        if lhs < lp.objective[j]:
            raise RuntimeError("dual infeasibility in reported optimum")
    dual_obj = sum((lp.rhs[i] * y[i] for i in range(m)), Fraction(0))
    if dual_obj != objective:
        raise RuntimeError("strong duality gap in reported optimum")


def solve_dual_basic(lp: LinearProgram) -> tuple[Fraction, ...]:
    """Vertex of the dual polyhedron {y >= 0 : matrix^T y >= objective}.

    Solved as an LP in its own right (min rhs.y), independently of the
    tableau dual that ``solve`` reports, so the two routes can be
    compared.  Requires the primal to have a finite optimum.
    """
    neg_at = lp.matrix.transpose().scale(-1)
    dual_lp = LinearProgram(
        neg_at,
        tuple(-cj for cj in lp.objective),
        tuple(-bi for bi in lp.rhs),
    )
    sol = solve(dual_lp)
    if sol.status != "optimal":
        raise ValueError(f"dual program is {sol.status}; primal optimum must be finite")
    return sol.primal
