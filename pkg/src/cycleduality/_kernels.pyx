# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled kernels: same algorithms, order, and tie-breaks as
_kernels_py.py.  Masks and matrix entries stay Python ints (they exceed
64 bits routinely); the win comes from typed loop indices and compiled
control flow.
"""

from .errors import BudgetExceededError

__all__ = [
    "gf2_eliminate",
    "gf2_solve_bits",
    "det_bareiss",
    "max_weight_disjoint",
    "min_hitting_mask",
]

IMPL = "cython"


def gf2_eliminate(rows, ncols):
    """Row-reduce bitmask rows over GF(2).

    Returns (rank, pivot_rows, pivot_cols) where pivot_rows are original
    row indices and pivot_cols the matching pivot columns, both in
    elimination order (columns scanned left to right).
    """
    cdef list work = list(rows)
    cdef list origin = list(range(len(work)))
    cdef Py_ssize_t nrows = len(work)
    cdef Py_ssize_t rank = 0
    cdef Py_ssize_t col, r, src
    cdef list pivot_rows = []
    cdef list pivot_cols = []
    cdef object bit, piv
    for col in range(ncols):
        bit = 1 << col
        src = -1
        for r in range(rank, nrows):
            if work[r] & bit:
                src = r
                break
        if src < 0:
            continue
        work[rank], work[src] = work[src], work[rank]
        origin[rank], origin[src] = origin[src], origin[rank]
        piv = work[rank]
        for r in range(nrows):
            if r != rank and (work[r] & bit):
                work[r] = work[r] ^ piv
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
    cdef list aug = []
    cdef Py_ssize_t i = 0
    cdef object row, bit, piv, rhs_bit, x
    for row in rows:
        aug.append(row | ((((<object>rhs) >> i) & 1) << ncols))
        i += 1
    cdef Py_ssize_t nrows = len(aug)
    cdef Py_ssize_t rank = 0
    cdef Py_ssize_t col, r, src
    cdef list pivots = []
    for col in range(ncols):
        bit = 1 << col
        src = -1
        for r in range(rank, nrows):
            if aug[r] & bit:
                src = r
                break
        if src < 0:
            continue
        aug[rank], aug[src] = aug[src], aug[rank]
        piv = aug[rank]
        for r in range(nrows):
            if r != rank and (aug[r] & bit):
                aug[r] = aug[r] ^ piv
        pivots.append(col)
        rank += 1
    rhs_bit = 1 << ncols
    for r in range(rank, nrows):
        if aug[r] & rhs_bit:
            return -1
    x = 0
    for r in range(rank):
        if aug[r] & rhs_bit:
            x = x | (1 << (<object>pivots[r]))
    return x


def det_bareiss(matrix):
    """Exact determinant of a square integer matrix (fraction-free pivoting)."""
    cdef Py_ssize_t n = len(matrix)
    if n == 0:
        return 1
    cdef list a = [list(row) for row in matrix]
    cdef int sign = 1
    cdef object prev = 1
    cdef object pivot, aik
    cdef list row_i, row_k
    cdef Py_ssize_t k, i, j, r
    cdef bint found
    for k in range(n - 1):
        if a[k][k] == 0:
            found = False
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    found = True
                    break
            if not found:
                return 0
        pivot = (<list>a[k])[k]
        for i in range(k + 1, n):
            row_i = <list>a[i]
            row_k = <list>a[k]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * (<list>a[n - 1])[n - 1]


def max_weight_disjoint(masks, weights, node_budget):
    """Branch-and-bound: heaviest subset of items with pairwise-disjoint masks.

    Deterministic: items are scanned in the given order, include branch
    first, and only strict improvements replace the incumbent, so the
    result is the first maximum in DFS order.  Every search node counts
    against ``node_budget``.  Returns (best_weight, chosen_indices, nodes).
    """
    cdef Py_ssize_t n = len(masks)
    cdef list mlist = list(masks)
    cdef list wlist = list(weights)
    cdef list suffix = [0] * (n + 1)
    cdef Py_ssize_t i
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + wlist[i]
    state = _BBState(mlist, wlist, suffix, node_budget)
    state.rec(0, 0, 0)
    return state.best_w, state.best_sel, state.nodes


cdef class _BBState:
    cdef list masks, weights, suffix, sel
    cdef public object best_w, best_sel
    cdef public long long nodes
    cdef object node_budget
    cdef Py_ssize_t n

    def __init__(self, list masks, list weights, list suffix, node_budget):
        self.masks = masks
        self.weights = weights
        self.suffix = suffix
        self.node_budget = node_budget
        self.n = len(masks)
        self.best_w = -1
        self.best_sel = ()
        self.nodes = 0
        self.sel = []

    cdef rec(self, Py_ssize_t i, object used, object w):
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise BudgetExceededError("subsets", self.node_budget)
        if w + self.suffix[i] <= self.best_w:
            return
        if i == self.n:
            self.best_w = w
            self.best_sel = tuple(self.sel)
            return
        if not used & self.masks[i]:
            self.sel.append(i)
            self.rec(i + 1, used | self.masks[i], w + self.weights[i])
            self.sel.pop()
        self.rec(i + 1, used, w)


cdef object _gosper_next(object mask):
    cdef object low = mask & -mask
    cdef object ripple = mask + low
    return ripple | (((mask ^ ripple) >> 2) // low)


def min_hitting_mask(cycle_masks, universe, subset_budget, max_size):
    """Smallest vertex/edge mask intersecting every cycle mask.

    Searches by increasing size, candidates of one size in ascending
    numeric (colex) order, so the answer is canonical.  ``max_size`` of
    None searches up to the full universe.  Returns (mask, subsets_tried)
    with mask -1 when nothing within ``max_size`` hits everything.
    """
    cdef list cms = list(cycle_masks)
    cdef Py_ssize_t ncm = len(cms)
    if max_size is None:
        max_size = universe
    cdef Py_ssize_t cap = min(max_size, universe)
    cdef long long tried = 0
    cdef object budget = subset_budget
    cdef object limit = 1 << (<object>universe)
    cdef object cand, cm
    cdef Py_ssize_t k, t
    cdef bint ok
    for k in range(cap + 1):
        if k == 0:
            tried += 1
            if tried > budget:
                raise BudgetExceededError("subsets", subset_budget)
            if ncm == 0:
                return 0, tried
            continue
        cand = (1 << k) - 1
        while cand < limit:
            tried += 1
            if tried > budget:
                raise BudgetExceededError("subsets", subset_budget)
            ok = True
            for t in range(ncm):
                if not cand & cms[t]:
                    ok = False
                    break
            if ok:
                return cand, tried
            cand = _gosper_next(cand)
    return -1, tried
