"""Pure-Python kernels: the hot inner loops behind the exact algorithms.

The compiled extension (_kernels.pyx) mirrors these functions exactly,
including iteration order and tie-breaks, so both lanes are output
identical and the dispatcher in kernels.py may pick either.
"""

from __future__ import annotations

from .errors import BudgetExceededError

__all__ = [
    "gf2_eliminate",
    "gf2_solve_bits",
    "det_bareiss",
    "max_weight_disjoint",
    "min_hitting_mask",
]

IMPL = "python"


def gf2_eliminate(rows, ncols):
    """Row-reduce bitmask rows over GF(2).

    Returns (rank, pivot_rows, pivot_cols) where pivot_rows are original
    row indices and pivot_cols the matching pivot columns, both in
    elimination order (columns scanned left to right).
    """
    work = list(rows)
    origin = list(range(len(work)))
    rank = 0
    pivot_rows = []
    pivot_cols = []
    for col in range(ncols):
        bit = 1 << col
        src = -1
        for r in range(rank, len(work)):
            if work[r] & bit:
                src = r
                break
        if src < 0:
            continue
        work[rank], work[src] = work[src], work[rank]
        origin[rank], origin[src] = origin[src], origin[rank]
        for r in range(len(work)):
            if r != rank and (work[r] & bit):
                work[r] ^= work[rank]
        pivot_rows.append(origin[rank])
        pivot_cols.append(col)
        rank += 1
    return rank, pivot_rows, pivot_cols


def gf2_solve_bits(rows, ncols, rhs):
    """Solve the GF(2) system (one equation per row) for x as a bitmask.

    ``rhs`` packs the right-hand side with bit i for row i.  Free
    variables are set to 0.  Returns the solution mask, or -1 if the
    system is inconsistent.
    """
    aug = []
    for i, row in enumerate(rows):
        aug.append(row | (((rhs >> i) & 1) << ncols))
    rank = 0
    pivots = []
    for col in range(ncols):
        bit = 1 << col
        src = -1
        for r in range(rank, len(aug)):
            if aug[r] & bit:
                src = r
                break
        if src < 0:
            continue
        aug[rank], aug[src] = aug[src], aug[rank]
        for r in range(len(aug)):
            if r != rank and (aug[r] & bit):
                aug[r] ^= aug[rank]
        pivots.append(col)
        rank += 1
    rhs_bit = 1 << ncols
    for r in range(rank, len(aug)):
        if aug[r] & rhs_bit:
            return -1
    x = 0
    for r, col in enumerate(pivots):
        if aug[r] & rhs_bit:
            x |= 1 << col
    return x


def det_bareiss(matrix):
    """Exact determinant of a square integer matrix (fraction-free pivoting)."""
    n = len(matrix)
    if n == 0:
        return 1
    a = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def max_weight_disjoint(masks, weights, node_budget):
    """Branch-and-bound: heaviest subset of items with pairwise-disjoint masks.

    Deterministic: items are scanned in the given order, include branch
    first, and only strict improvements replace the incumbent, so the
    result is the first maximum in DFS order.  Every search node counts
    against ``node_budget``.  Returns (best_weight, chosen_indices, nodes).
    """
    n = len(masks)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + weights[i]
    best_w = -1
    best_sel = ()
    nodes = 0
    sel = []

    def rec(i, used, w):
        nonlocal best_w, best_sel, nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceededError("subsets", node_budget)
        if w + suffix[i] <= best_w:
            return
        if i == n:
            best_w = w
            best_sel = tuple(sel)
            return
        if not used & masks[i]:
            sel.append(i)
            rec(i + 1, used | masks[i], w + weights[i])
            sel.pop()
        rec(i + 1, used, w)

    rec(0, 0, 0)
    return best_w, best_sel, nodes


def _gosper_next(mask):
    low = mask & -mask
    ripple = mask + low
    return ripple | (((mask ^ ripple) >> 2) // low)


def min_hitting_mask(cycle_masks, universe, subset_budget, max_size):
    """Smallest vertex/edge mask intersecting every cycle mask.

    Searches by increasing size, candidates of one size in ascending
    numeric (colex) order, so the answer is canonical.  ``max_size`` of
    None searches up to the full universe.  Returns (mask, subsets_tried)
    with mask -1 when nothing within ``max_size`` hits everything.
    """
    if max_size is None:
        max_size = universe
    max_size = min(max_size, universe)
    tried = 0
    limit = 1 << universe
    for k in range(max_size + 1):
        if k == 0:
            tried += 1
            if tried > subset_budget:
                raise BudgetExceededError("subsets", subset_budget)
            if not cycle_masks:
                return 0, tried
            continue
        cand = (1 << k) - 1
        while cand < limit:
            tried += 1
            if tried > subset_budget:
                raise BudgetExceededError("subsets", subset_budget)
            ok = True
            for cm in cycle_masks:
                if not cand & cm:
                    ok = False
                    break
            if ok:
                return cand, tried
            cand = _gosper_next(cand)
    return -1, tried
