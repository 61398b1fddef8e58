"""The four packing/covering duality engines.

Each engine produces a two-sided certificate: a disjoint cycle family
together with a hitting set, plus the checked inequality
``packing.score >= |hitting.elements|``.

Routes:

* undirected edge targets: GF(2) cycle-space argument (rank of the
  target-row submatrix, all-ones solve, symmetric-difference peeling).
* directed edge targets: exact LP over [I; N] with the incidence matrix
  N, dual support as the hitting set.
* bidirected / directed vertex targets: vertex split into a signed graph
  whose edge problem is the LP over [I; M/2; -M/2], certificates pulled
  back through the split.

The dual vector is always taken from a basic solution of the explicit
dual program, and cross-checked against the dual read off the primal
tableau; the two routes must agree on the objective, and the primal and
basic dual must be integral (guaranteed for directed inputs; general
signed inputs can fail with IntegralityError, see
_solve_with_integral_certificates).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional

from .errors import BudgetExceededError, IntegralityError
from .gf2 import GF2Matrix, gf2_bases, gf2_solve
from .graphs import (
    BidirectedGraph,
    DirectedGraph,
    Graph,
    SignedCycle,
    UndirectedGraph,
    directed_to_bidirected,
    incidence_matrix,
    vertex_split,
)
from .lp import LinearProgram, LPSolution, solve, solve_dual_basic
from .oracles import (
    DEFAULT_BUDGET,
    EnumerationBudget,
    enumerate_cycles_indexed,
    max_packing,
    min_hitting,
    verify_hitting,
)
from .regularity import RationalMatrix
from .reports import DualityReport, HittingCertificate, PackingCertificate

__all__ = [
    "peel_cycles",
    "build_edge_lp",
    "build_split_vertex_lp",
    "undirected_edge_duality",
    "directed_edge_duality",
    "bidirected_vertex_duality",
    "directed_vertex_duality",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)
_HALF = Fraction(1, 2)


# ---------------------------------------------------------------------------
# deterministic peeling of cycle-union edge sets


def peel_cycles(
    graph: Graph, edge_ids: Iterable[str]
) -> tuple[list[SignedCycle], tuple[str, ...]]:
    """Decompose an edge set into edge-disjoint cycles, deterministically.

    Walks start at the smallest remaining vertex and always take the
    smallest-indexed feasible unused edge (direction-respecting for
    directed graphs, sign-switching for signed ones).  When the walk
    revisits one of its own vertices, the enclosed segment is extracted
    as a cycle and the walk restarts.  Returns (cycles, leftovers);
    leftovers are the edges of any component on which the walk got stuck,
    which cannot happen for supports coming from the engines' solutions.
    """
    eidx = graph.edge_index
    vidx = graph.vertex_index
    support: set[int] = set()
    for eid in edge_ids:
        support.add(eidx[eid])
    signed = graph.kind == "bidirected"
    directed = graph.kind == "directed"

    # move table over the full graph; filtered against `support` when walking
    moves: list[list[tuple[int, int, str]]] = [[] for _ in range(graph.n)]
    for j, e in enumerate(graph.edges):
        ui, vi = vidx[e.u], vidx[e.v]
        if directed:
            moves[ui].append((j, vi, ""))
        elif signed:
            su, sv = graph.signs[j]
            moves[ui].append((j, vi, su))
            moves[vi].append((j, ui, sv))
        else:
            moves[ui].append((j, vi, ""))
            moves[vi].append((j, ui, ""))
    for row in moves:
        row.sort()

    def sign_of(j: int, at: int) -> str:
        su, sv = graph.signs[j]
        return su if vidx[graph.edges[j].u] == at else sv

    cycles: list[SignedCycle] = []
    while support:
        starters = [
            v for v in range(graph.n)
            if any(j in support for j, _, _ in moves[v])
        ]
        if not starters:
            break
        start = starters[0]
        walk_v = [start]
        walk_e: list[int] = []
        used: set[int] = set()
        pos = {start: 0}
        arrival = ""  # sign of the last edge at the current vertex
        stuck = False
        while True:
            cur = walk_v[-1]
            step = None
            for j, w, s_here in moves[cur]:
                if j not in support or j in used:
                    continue
                if signed and walk_e and s_here == arrival:
                    continue
                step = (j, w, s_here)
                break
            if step is None:
                stuck = True
                break
            j, w, s_here = step
            walk_e.append(j)
            walk_v.append(w)
            used.add(j)
            arrival = sign_of(j, w) if signed else ""
            if w in pos:
                i = pos[w]
                seg_v = walk_v[i:-1]
                seg_e = walk_e[i:]
                if signed:
                    first = sign_of(seg_e[0], seg_v[0])
                    last = sign_of(seg_e[-1], seg_v[0])
                    if first == last:
                        stuck = True
                        break
                cyc = SignedCycle(
                    tuple(graph.vertices[v] for v in seg_v),
                    tuple(graph.edges[j].id for j in seg_e),
                )
                cyc.validate(graph)
                cycles.append(cyc.canonical(graph))
                support.difference_update(seg_e)
                break
            pos[w] = len(walk_v) - 1
        if stuck:
            break
    leftovers = tuple(graph.edges[j].id for j in sorted(support))
    return cycles, leftovers


# ---------------------------------------------------------------------------
# LP assembly


def build_edge_lp(graph: DirectedGraph, targets: Iterable[str]) -> LinearProgram:
    """Packing LP for directed edge targets: maximize f.x subject to
    x <= 1 and (incidence) x <= 0, x >= 0."""
    m, n = graph.m, graph.n
    inc = incidence_matrix(graph)
    rows = []
    for i in range(m):
        rows.append(tuple(_ONE if j == i else _ZERO for j in range(m)))
    for i in range(n):
        rows.append(tuple(Fraction(inc[i][j]) for j in range(m)))
    rhs = tuple([_ONE] * m + [_ZERO] * n)
    tset = set(targets)
    obj = tuple(_ONE if e.id in tset else _ZERO for e in graph.edges)
    return LinearProgram(RationalMatrix(rows), rhs, obj)


def build_split_vertex_lp(
    split_graph: BidirectedGraph, target_edge_ids: Iterable[str]
) -> LinearProgram:
    """Packing LP on a split graph: maximize f.x subject to x <= 1,
    (M/2) x <= 0 and (-M/2) x <= 0, x >= 0, with M the signed incidence."""
    m, n = split_graph.m, split_graph.n
    inc = incidence_matrix(split_graph)
    rows = []
    for i in range(m):
        rows.append(tuple(_ONE if j == i else _ZERO for j in range(m)))
    for i in range(n):
        rows.append(tuple(_HALF * inc[i][j] for j in range(m)))
    for i in range(n):
        rows.append(tuple(-_HALF * inc[i][j] for j in range(m)))
    rhs = tuple([_ONE] * m + [_ZERO] * (2 * n))
    tset = set(target_edge_ids)
    obj = tuple(_ONE if e.id in tset else _ZERO for e in split_graph.edges)
    return LinearProgram(RationalMatrix(rows), rhs, obj)


def _solve_with_integral_certificates(
    lp: LinearProgram, context: str
) -> tuple[LPSolution, tuple[int, ...], tuple[Fraction, ...]]:
    """Solve the LP; return (solution, 0/1 primal, integral dual).

    The dual used for certificates comes from a basic solution of the
    explicit dual program; the tableau dual serves as a cross-check on
    the optimum value.  The primal and the basic-route dual must be
    integral: that holds for every constraint matrix the engines build
    from directed inputs, whose split incidence has one +1 and one -1
    per column.  General signed inputs can have genuinely fractional
    optimal vertices (the relaxation is not always tight), and then the
    construction cannot proceed: IntegralityError reports it.
    """
    sol = solve(lp)
    if sol.status != "optimal":
        raise IntegralityError(f"{context}: unexpected LP status {sol.status}")
    xs = []
    for v in sol.primal:
        if v.denominator != 1 or v.numerator not in (0, 1):
            raise IntegralityError(f"{context}: non-0/1 primal component {v}")
        xs.append(int(v))
    y_basic = solve_dual_basic(lp)
    for v in y_basic:
        if v.denominator != 1:
            raise IntegralityError(f"{context}: fractional dual component {v}")
    tab_obj = sum(
        (b * y for b, y in zip(lp.rhs, sol.dual)), start=_ZERO
    )
    basic_obj = sum(
        (b * y for b, y in zip(lp.rhs, y_basic)), start=_ZERO
    )
    if tab_obj != sol.objective or basic_obj != sol.objective:
        raise IntegralityError(f"{context}: dual routes disagree on the objective")
    return sol, tuple(xs), y_basic


def _check_dual_dominates_cycles(
    graph: Graph,
    y_edges: tuple[Fraction, ...],
    target_edge_ids: set[str],
    budget: EnumerationBudget,
) -> None:
    """For every target cycle C: sum of y over E(C) >= |E(C) ∩ targets|.

    This is the inequality that makes the dual support a hitting set; it
    is re-verified directly on the enumerated cycles.
    """
    eidx = graph.edge_index
    tmask = 0
    for t in target_edge_ids:
        tmask |= 1 << eidx[t]
    for c in enumerate_cycles_indexed(graph, budget):
        hits = (c.emask & tmask).bit_count()
        if hits == 0:
            continue
        total = sum((y_edges[j] for j in c.eseq), start=_ZERO)
        if total < hits:
            raise IntegralityError(
                "dual vector fails the per-cycle domination inequality"
            )


# ---------------------------------------------------------------------------
# engines


def undirected_edge_duality(
    graph: UndirectedGraph,
    targets: Iterable[str],
    budget: EnumerationBudget = DEFAULT_BUDGET,
    verify: str = "oracle",
) -> DualityReport:
    """Edge-target duality on undirected multigraphs via the cycle space.

    Builds the 0/1 edge-versus-cycle incidence matrix of all target
    cycles over GF(2), takes the rank r of its target-edge rows, solves
    the nonsingular r x r block against the all-ones vector, and peels
    the symmetric difference of the selected cycles into an edge-disjoint
    family covering at least r target edges.  The hitting set is the
    exhaustive minimum; the rank is reported as the lower-bound witness.
    """
    f = sorted(set(targets), key=lambda t: graph.edge_index[t])
    fmask = 0
    for t in f:
        fmask |= 1 << graph.edge_index[t]
    cycles = [
        c for c in enumerate_cycles_indexed(graph, budget) if c.emask & fmask
    ]
    packing_cycles: tuple[SignedCycle, ...] = ()
    score = 0
    rank = 0
    if cycles:
        edge_rows = [j for j in range(graph.m) if any(
            c.emask >> j & 1 for c in cycles
        )]
        f_rows = [j for j in edge_rows if fmask >> j & 1]
        mf = GF2Matrix.from_entries(
            [[c.emask >> j & 1 for c in cycles] for j in f_rows]
        )
        rank, row_basis, col_basis = gf2_bases(mf)
        if rank:
            n_block = mf.submatrix(row_basis, col_basis)
            z = gf2_solve(n_block, [1] * rank)
            assert z is not None  # the block is nonsingular by construction
            sym = 0
            for t, flag in zip(col_basis, z):
                if flag:
                    sym ^= cycles[t].emask
            chosen_edges = [
                graph.edges[j].id for j in range(graph.m) if sym >> j & 1
            ]
            peeled, leftovers = peel_cycles(graph, chosen_edges)
            assert not leftovers  # cycle-space vectors decompose completely
            packing_cycles = tuple(peeled)
            score = (sym & fmask).bit_count()
            assert score >= rank
    hitting = min_hitting(graph, f, "edge", budget)
    assert hitting is not None
    packing = PackingCertificate(packing_cycles, "edge", score)
    if verify != "off":
        assert verify_hitting(graph, hitting.elements, f, "edge", budget)
        assert rank >= len(hitting.elements)
    if verify == "exhaustive":
        best = max_packing(graph, f, "edges", "edge", budget)
        assert best.score >= score  # the construction is a lower-bound witness
    return DualityReport(
        packing=packing,
        hitting=hitting,
        inequality_verified=score >= len(hitting.elements),
        engine="undirected-edge",
        lp_objective=None,
        gf2_rank=rank,
        verification=verify,
    )


def _hitting_from_dual(
    elements: frozenset[str], kind: str, verified: Optional[bool]
) -> HittingCertificate:
    return HittingCertificate(kind=kind, elements=elements, hits_all=verified)


def _empty_report(kind: str, engine: str, verify: str) -> DualityReport:
    """Degenerate instance with no cycles at all: both sides are empty."""
    verified = None if verify == "off" else True
    return DualityReport(
        packing=PackingCertificate((), kind, 0),
        hitting=_hitting_from_dual(frozenset(), kind, verified),
        inequality_verified=True,
        engine=engine,
        lp_objective=_ZERO,
        verification=verify,
    )


def _prune_hitting(
    graph: Graph,
    elements: frozenset[str],
    targets: set[str],
    kind: str,
    budget: EnumerationBudget,
) -> frozenset[str]:
    """Drop elements whose removal keeps every target cycle hit.

    Greedy pass in reverse canonical order; the result is
    inclusion-minimal, not necessarily minimum.
    """
    index = graph.vertex_index if kind == "vertex" else graph.edge_index
    tmask = 0
    for t in targets:
        tmask |= 1 << index[t]
    masks = []
    for c in enumerate_cycles_indexed(graph, budget):
        m = c.vmask if kind == "vertex" else c.emask
        if m & tmask:
            masks.append(m)
    keep = set(elements)
    for x in sorted(elements, key=index.__getitem__, reverse=True):
        trial = keep - {x}
        tm = 0
        for e in trial:
            tm |= 1 << index[e]
        if all(m & tm for m in masks):
            keep = trial
    return frozenset(keep)


def directed_edge_duality(
    graph: DirectedGraph,
    targets: Iterable[str],
    budget: EnumerationBudget = DEFAULT_BUDGET,
    verify: str = "oracle",
) -> DualityReport:
    """Edge-target duality on digraphs via the exact packing LP.

    The optimal 0/1 primal is peeled into edge-disjoint directed cycles;
    the hitting set is the support of the edge part of an integral dual,
    pruned of members the remaining ones already cover.
    """
    f = set(targets)
    for t in f:
        if t not in graph.edge_index:
            raise KeyError(f"unknown target edge {t!r}")
    if graph.m == 0:
        # no edges, no cycles; the LP would have zero columns
        return _empty_report("edge", "directed-edge", verify)
    lp = build_edge_lp(graph, f)
    sol, xs, y = _solve_with_integral_certificates(lp, "directed edge engine")
    support = [e.id for e, flag in zip(graph.edges, xs) if flag]
    peeled, leftovers = peel_cycles(graph, support)
    if leftovers:
        raise IntegralityError("primal support did not decompose into cycles")
    score = sum(
        1 for cyc in peeled for eid in cyc.edges if eid in f
    )
    assert Fraction(score) == sol.objective
    y_edges = y[: graph.m]
    elements = frozenset(
        e.id for e, v in zip(graph.edges, y_edges) if v != 0
    )
    assert len(elements) <= sum(y_edges)
    verified: Optional[bool] = None
    if verify != "off":
        # enumeration cap exceeded -> report stays usable, hits_all None
        try:
            elements = _prune_hitting(graph, elements, f, "edge", budget)
            assert verify_hitting(graph, elements, f, "edge", budget)
            _check_dual_dominates_cycles(graph, y_edges, f, budget)
            verified = True
            if verify == "exhaustive":
                best = max_packing(graph, f, "edges", "edge", budget)
                assert best.score == score
        except BudgetExceededError:
            verified = None
    return DualityReport(
        packing=PackingCertificate(tuple(peeled), "edge", score),
        hitting=_hitting_from_dual(elements, "edge", verified),
        inequality_verified=score >= len(elements),
        engine="directed-edge",
        lp_objective=sol.objective,
        verification=verify,
    )


def _split_cycle_to_base(
    base: BidirectedGraph, split_edge_of: dict, cyc: SignedCycle
) -> SignedCycle:
    """Pull a cycle of the split graph back to the base graph.

    Cycles of the split graph alternate original and split edges, so the
    split edges name the base vertices in traversal order and the
    original edges connect them.
    """
    edge_of_vertex = {eid: v for v, eid in split_edge_of.items()}
    k = len(cyc.edges)
    start = next(
        i for i, eid in enumerate(cyc.edges) if eid in edge_of_vertex
    )
    order = [cyc.edges[(start + t) % k] for t in range(k)]
    verts = []
    edges = []
    for t, eid in enumerate(order):
        if t % 2 == 0:
            verts.append(edge_of_vertex[eid])
        else:
            edges.append(eid)
    out = SignedCycle(tuple(verts), tuple(edges))
    out.validate(base)
    return out.canonical(base)


def bidirected_vertex_duality(
    graph: BidirectedGraph,
    targets: Iterable[str],
    budget: EnumerationBudget = DEFAULT_BUDGET,
    verify: str = "oracle",
) -> DualityReport:
    """Vertex-target duality on signed graphs via the vertex split.

    Every vertex is split into a signed pair joined by a fresh edge; a
    cycle through the vertex must use that edge, which turns the vertex
    problem into an edge problem on the split graph.  The certificates
    are pulled back from an integral LP optimum.  Images of digraphs
    always admit one; other signed graphs sometimes do not, and then the
    engine raises IntegralityError instead of returning a weaker answer.
    """
    s = set(targets)
    for t in s:
        if t not in graph.vertex_index:
            raise KeyError(f"unknown target vertex {t!r}")
    if graph.n == 0:
        # the split graph would have no edges and a zero-column LP
        return _empty_report("vertex", "bidirected-vertex", verify)
    split = vertex_split(graph)
    split_graph = split.graph
    split_edge_of = dict(split.split_edge)
    f_ids = {split_edge_of[v] for v in s}
    lp = build_split_vertex_lp(split_graph, f_ids)
    sol, xs, y = _solve_with_integral_certificates(lp, "vertex engine")
    support = [e.id for e, flag in zip(split_graph.edges, xs) if flag]
    peeled, leftovers = peel_cycles(split_graph, support)
    if leftovers:
        raise IntegralityError("split-graph support did not decompose into cycles")
    base_cycles = tuple(
        _split_cycle_to_base(graph, split_edge_of, cyc) for cyc in peeled
    )
    seen: set[str] = set()
    score = 0
    for cyc in base_cycles:
        assert not seen & set(cyc.vertices)  # split edges force disjointness
        seen |= set(cyc.vertices)
        score += sum(1 for v in cyc.vertices if v in s)
    assert Fraction(score) == sol.objective
    y_edges = y[: split_graph.m]
    split_support = [
        e.id for e, v in zip(split_graph.edges, y_edges) if v != 0
    ]
    vertex_of_edge = {eid: v for v, eid in split_edge_of.items()}
    elements = set()
    for eid in split_support:
        if eid in vertex_of_edge:
            elements.add(vertex_of_edge[eid])
        else:
            e = graph.edges[graph.edge_index[eid]]
            a, b = e.u, e.v
            elements.add(
                a if graph.vertex_index[a] < graph.vertex_index[b] else b
            )
    elements = frozenset(elements)
    assert len(elements) <= sum(y_edges)
    verified: Optional[bool] = None
    if verify != "off":
        try:
            elements = _prune_hitting(graph, elements, s, "vertex", budget)
            assert verify_hitting(graph, elements, s, "vertex", budget)
            _check_dual_dominates_cycles(split_graph, y_edges, f_ids, budget)
            verified = True
            if verify == "exhaustive":
                best = max_packing(graph, s, "vertices", "vertex", budget)
                assert best.score == score
        except BudgetExceededError:
            verified = None
    return DualityReport(
        packing=PackingCertificate(base_cycles, "vertex", score),
        hitting=_hitting_from_dual(elements, "vertex", verified),
        inequality_verified=score >= len(elements),
        engine="bidirected-vertex",
        lp_objective=sol.objective,
        verification=verify,
    )


def _as_directed_cycle(graph: DirectedGraph, cyc: SignedCycle) -> SignedCycle:
    """Reorient a cycle given as an edge set into directed traversal order."""
    by_tail = {}
    for eid in cyc.edges:
        e = graph.edges[graph.edge_index[eid]]
        by_tail[e.u] = e
    start = min(cyc.vertices, key=lambda v: graph.vertex_index[v])
    verts = [start]
    edges = []
    cur = start
    for _ in range(len(cyc.edges)):
        e = by_tail[cur]
        edges.append(e.id)
        cur = e.v
        if cur != start:
            verts.append(cur)
    out = SignedCycle(tuple(verts), tuple(edges))
    out.validate(graph)
    return out


def directed_vertex_duality(
    graph: DirectedGraph,
    targets: Iterable[str],
    budget: EnumerationBudget = DEFAULT_BUDGET,
    verify: str = "oracle",
) -> DualityReport:
    """Vertex-target duality on digraphs.

    Runs the signed-graph vertex engine on the standard signed image
    (minus at tails, plus at heads) and restates the certificates for the
    digraph.  Cycles of the image correspond exactly to directed cycles.
    """
    image = directed_to_bidirected(graph)
    inner_verify = "off" if verify == "off" else "oracle"
    inner = bidirected_vertex_duality(image, targets, budget, verify=inner_verify)
    cycles = tuple(
        _as_directed_cycle(graph, cyc) for cyc in inner.packing.cycles
    )
    packing = PackingCertificate(cycles, "vertex", inner.packing.score)
    elements = inner.hitting.elements
    verified: Optional[bool] = None
    if verify != "off":
        try:
            assert verify_hitting(graph, elements, set(targets), "vertex", budget)
            verified = True
            if verify == "exhaustive":
                best = max_packing(graph, set(targets), "vertices", "vertex", budget)
                assert best.score == packing.score
        except BudgetExceededError:
            verified = None
    return DualityReport(
        packing=packing,
        hitting=_hitting_from_dual(elements, "vertex", verified),
        inequality_verified=packing.score >= len(elements),
        engine="directed-vertex",
        lp_objective=inner.lp_objective,
        verification=verify,
    )
