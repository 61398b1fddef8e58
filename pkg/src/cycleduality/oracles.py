"""Brute-force ground truth: cycle enumeration, optimal packings and
hitting sets by exhaustive search, counterexample property checks, and
the two experimental searches.

Everything here is exact and deterministic.  Budgets cap the amount of
enumeration work; exceeding one raises BudgetExceededError rather than
returning a partial answer.
"""

from __future__ import annotations

import dataclasses
import itertools
import random
from typing import Iterable, Optional

from . import kernels
from .errors import BudgetExceededError, GraphFormatError
from .graphs import (
    BidirectedGraph,
    Graph,
    SignedCycle,
    UndirectedGraph,
    graph_to_obj,
    incidence_matrix,
)
from .reports import HittingCertificate, PackingCertificate

__all__ = [
    "EnumerationBudget",
    "DEFAULT_BUDGET",
    "IndexedCycle",
    "enumerate_cycles",
    "enumerate_cycles_indexed",
    "max_packing",
    "min_hitting",
    "verify_hitting",
    "check_counterexample_properties",
    "is_disjoint_cycle_union",
    "SearchReport",
    "search_vertex_question_counterexample",
    "FixtureReport",
    "search_nullspace_noncycle_fixture",
]


@dataclasses.dataclass(frozen=True)
class EnumerationBudget:
    """Work caps for the exhaustive routines."""

    max_cycles: int = 100_000
    max_subsets: int = 1_000_000


DEFAULT_BUDGET = EnumerationBudget()


@dataclasses.dataclass(frozen=True)
class IndexedCycle:
    """A cycle in index form plus vertex/edge bitmasks for set algebra."""

    vseq: tuple[int, ...]
    eseq: tuple[int, ...]
    vmask: int
    emask: int

    def to_signed(self, graph: Graph) -> SignedCycle:
        return SignedCycle(
            tuple(graph.vertices[i] for i in self.vseq),
            tuple(graph.edges[i].id for i in self.eseq),
        )


def _adjacency(graph: Graph) -> list[list[tuple[int, int, int, int]]]:
    """Per-vertex move table: (edge index, other endpoint, sign here, sign there).

    Directed graphs only list tail-to-head moves; signs are 0 outside the
    signed kind.
    """
    adj: list[list[tuple[int, int, int, int]]] = [[] for _ in range(graph.n)]
    vidx = graph.vertex_index
    for j, e in enumerate(graph.edges):
        ui, vi = vidx[e.u], vidx[e.v]
        if graph.kind == "directed":
            adj[ui].append((j, vi, 0, 0))
        elif graph.kind == "undirected":
            adj[ui].append((j, vi, 0, 0))
            adj[vi].append((j, ui, 0, 0))
        else:
            su, sv = graph.signs[j]
            iu = 1 if su == "+" else -1
            iv = 1 if sv == "+" else -1
            adj[ui].append((j, vi, iu, iv))
            adj[vi].append((j, ui, iv, iu))
    for moves in adj:
        moves.sort()
    return adj


def enumerate_cycles_indexed(
    graph: Graph, budget: EnumerationBudget = DEFAULT_BUDGET
) -> list[IndexedCycle]:
    """All cycles of the graph, one canonical representative each.

    Cycles are vertex-simple closed walks of length at least two.  In
    directed graphs they follow edge directions; in signed graphs they
    must switch sign at every vertex, including the start.  The result is
    sorted by (length, vertex sequence, edge sequence).
    """
    adj = _adjacency(graph)
    signed = graph.kind == "bidirected"
    directed = graph.kind == "directed"
    found: list[IndexedCycle] = []
    path_v: list[int] = []
    path_e: list[int] = []

    def accept_direction(closing: int) -> bool:
        # keep exactly one traversal per cycle
        if directed:
            return True
        if len(path_v) == 2:
            return path_e[0] < closing
        return path_v[1] < path_v[-1]

    def extend(v: int, arr_sign: int, start: int, first_sign: int,
               vmask: int, emask: int) -> None:
        for j, w, s_here, s_there in adj[v]:
            if emask & (1 << j):
                continue
            if signed and path_e and s_here == arr_sign:
                continue
            if w == start:
                if signed and s_there == first_sign:
                    continue
                if not accept_direction(j):
                    continue
                found.append(IndexedCycle(
                    tuple(path_v), tuple(path_e) + (j,), vmask, emask | (1 << j)
                ))
                if len(found) > budget.max_cycles:
                    raise BudgetExceededError("cycles", budget.max_cycles)
                continue
            if w < start or vmask & (1 << w):
                continue
            path_v.append(w)
            path_e.append(j)
            extend(w, s_there, start,
                   s_here if len(path_e) == 1 else first_sign,
                   vmask | (1 << w), emask | (1 << j))
            path_e.pop()
            path_v.pop()

    for start in range(graph.n):
        path_v[:] = [start]
        path_e.clear()
        extend(start, 0, start, 0, 1 << start, 0)

    found.sort(key=lambda c: (len(c.vseq), c.vseq, c.eseq))
    return found


def enumerate_cycles(
    graph: Graph, budget: EnumerationBudget = DEFAULT_BUDGET
) -> list[SignedCycle]:
    return [c.to_signed(graph) for c in enumerate_cycles_indexed(graph, budget)]


# ---------------------------------------------------------------------------
# optimal packing / hitting by exhaustive search


def _target_masks(graph: Graph, targets: Iterable[str], target_kind: str) -> int:
    mask = 0
    if target_kind == "vertices":
        index = graph.vertex_index
    elif target_kind == "edges":
        index = graph.edge_index
    else:
        raise ValueError(f"unknown target kind {target_kind!r}")
    for t in targets:
        if t not in index:
            raise GraphFormatError(f"unknown target {target_kind[:-1]} {t!r}")
        mask |= 1 << index[t]
    return mask


def max_packing(
    graph: Graph,
    targets: Iterable[str],
    target_kind: str,
    disjoint: str,
    budget: EnumerationBudget = DEFAULT_BUDGET,
) -> PackingCertificate:
    """Maximum total target touches over pairwise disjoint cycle families.

    ``disjoint`` is "vertex" or "edge".  Each chosen cycle contributes the
    number of target vertices (resp. edges) it passes through.
    """
    if disjoint not in ("vertex", "edge"):
        raise ValueError(f"unknown disjointness {disjoint!r}")
    tmask = _target_masks(graph, targets, target_kind)
    cycles = enumerate_cycles_indexed(graph, budget)
    weights = []
    masks = []
    kept: list[IndexedCycle] = []
    for c in cycles:
        w = ((c.vmask if target_kind == "vertices" else c.emask) & tmask).bit_count()
        if w == 0:
            continue
        kept.append(c)
        weights.append(w)
        masks.append(c.vmask if disjoint == "vertex" else c.emask)
    best, chosen, _nodes = kernels.max_weight_disjoint(
        masks, weights, budget.max_subsets
    )
    return PackingCertificate(
        cycles=tuple(kept[i].to_signed(graph) for i in chosen),
        disjointness=disjoint,
        score=best,
    )


def _cycles_through(
    graph: Graph, targets: Iterable[str], kind_of_target: str, budget: EnumerationBudget
) -> list[IndexedCycle]:
    tmask = _target_masks(graph, targets, kind_of_target)
    out = []
    for c in enumerate_cycles_indexed(graph, budget):
        hit = (c.vmask if kind_of_target == "vertices" else c.emask) & tmask
        if hit:
            out.append(c)
    return out


def min_hitting(
    graph: Graph,
    targets: Iterable[str],
    kind: str,
    budget: EnumerationBudget = DEFAULT_BUDGET,
    max_size: Optional[int] = None,
) -> Optional[HittingCertificate]:
    """Smallest vertex (resp. edge) set meeting every target cycle.

    ``kind`` selects what the hitting set consists of and, symmetrically,
    what makes a cycle a target: "vertex" means cycles through the target
    vertices are hit by vertices, "edge" the same with edges.  Returns
    None only when ``max_size`` is given and no hitting set that small
    exists.
    """
    if kind not in ("vertex", "edge"):
        raise ValueError(f"unknown hitting kind {kind!r}")
    target_kind = "vertices" if kind == "vertex" else "edges"
    cycles = _cycles_through(graph, targets, target_kind, budget)
    union = 0
    for c in cycles:
        union |= c.vmask if kind == "vertex" else c.emask
    universe = [i for i in range(max(graph.n, graph.m)) if union & (1 << i)]
    pos = {orig: k for k, orig in enumerate(universe)}
    compact = []
    for c in cycles:
        m = c.vmask if kind == "vertex" else c.emask
        cm = 0
        for orig, k in pos.items():
            if m & (1 << orig):
                cm |= 1 << k
        compact.append(cm)
    cap = len(universe) if max_size is None else min(max_size, len(universe))
    sol, _tried = kernels.min_hitting_mask(
        compact, len(universe), budget.max_subsets, cap
    )
    if sol < 0:
        return None
    names = graph.vertices if kind == "vertex" else tuple(e.id for e in graph.edges)
    elements = frozenset(
        names[universe[k]] for k in range(len(universe)) if sol & (1 << k)
    )
    return HittingCertificate(kind=kind, elements=elements, hits_all=True)


def verify_hitting(
    graph: Graph,
    elements: Iterable[str],
    targets: Iterable[str],
    kind: str,
    budget: EnumerationBudget = DEFAULT_BUDGET,
) -> bool:
    """Check that ``elements`` meets every target cycle (exhaustively)."""
    target_kind = "vertices" if kind == "vertex" else "edges"
    hmask = _target_masks(
        graph, elements, "vertices" if kind == "vertex" else "edges"
    )
    for c in _cycles_through(graph, targets, target_kind, budget):
        m = c.vmask if kind == "vertex" else c.emask
        if not m & hmask:
            return False
    return True


# ---------------------------------------------------------------------------
# property checks used by the counterexample-shape verifier


def check_counterexample_properties(
    graph: BidirectedGraph,
    targets: Iterable[str],
    k: int,
    budget: EnumerationBudget = DEFAULT_BUDGET,
) -> tuple[bool, bool]:
    """The two properties of the packing/covering gap witnesses.

    Property 1: no two edge-disjoint cycles both meet the target edge set,
    i.e. the best edge-disjoint packing scores at most 1.  Property 2:
    deleting any at most k edges leaves some cycle through the target
    set.  Returns (property1, property2).
    """
    f = list(targets)
    packing = max_packing(graph, f, "edges", "edge", budget)
    prop1 = packing.score <= 1

    cycles = _cycles_through(graph, f, "edges", budget)
    m = graph.m
    prop2 = True
    tried = 0
    for size in range(0, k + 1):
        for combo in itertools.combinations(range(m), size):
            tried += 1
            if tried > budget.max_subsets:
                raise BudgetExceededError("subsets", budget.max_subsets)
            xmask = 0
            for j in combo:
                xmask |= 1 << j
            if not any(c.emask & xmask == 0 for c in cycles):
                prop2 = False
                break
        if not prop2:
            break
    return prop1, prop2


def is_disjoint_cycle_union(
    graph: BidirectedGraph,
    edge_ids: Iterable[str],
    budget: EnumerationBudget = DEFAULT_BUDGET,
) -> bool:
    """Exact test: can the edge set be partitioned into edge-disjoint cycles?

    Cycles may share vertices; only their edge sets must be disjoint and
    cover the set exactly.  The empty set counts as the empty union.
    """
    tmask = _target_masks(graph, edge_ids, "edges")
    if tmask == 0:
        return True
    inside = [
        c
        for c in enumerate_cycles_indexed(graph, budget)
        if c.emask | tmask == tmask
    ]
    counter = 0

    def cover(remaining: int) -> bool:
        nonlocal counter
        if remaining == 0:
            return True
        low = remaining & -remaining
        for c in inside:
            counter += 1
            if counter > budget.max_subsets:
                raise BudgetExceededError("subsets", budget.max_subsets)
            if c.emask & low and c.emask | remaining == remaining:
                if cover(remaining & ~c.emask):
                    return True
        return False

    return cover(tmask)


# ---------------------------------------------------------------------------
# experimental searches


@dataclasses.dataclass(frozen=True)
class SearchReport:
    """Outcome of the undirected vertex-duality counterexample search."""

    mode: str  # "exhaustive" | "random"
    n_max: int
    seed: int
    trials: Optional[int]
    graphs_checked: int
    pairs_checked: int
    found: bool
    instance: Optional[dict]


def _all_simple_graphs(n: int):
    """All labeled simple undirected graphs on vertices v0..v{n-1}."""
    names = [f"v{i}" for i in range(n)]
    pairs = list(itertools.combinations(range(n), 2))
    for picks in range(1 << len(pairs)):
        edges = []
        eid = 0
        for t, (a, b) in enumerate(pairs):
            if picks & (1 << t):
                edges.append((f"e{eid}", names[a], names[b]))
                eid += 1
        yield UndirectedGraph(names, edges)


def _vertex_gap(
    graph: UndirectedGraph, subset: tuple[str, ...], budget: EnumerationBudget
) -> Optional[dict]:
    """Instance dict if packing/covering vertex duality fails, else None."""
    packing = max_packing(graph, subset, "vertices", "vertex", budget)
    hitting = min_hitting(graph, subset, "vertex", budget)
    assert hitting is not None
    if packing.score >= len(hitting.elements):
        return None
    # a claimed violation must survive certificate-level revalidation
    seen: set[str] = set()
    score = 0
    for cyc in packing.cycles:
        cyc.validate(graph)
        if seen & set(cyc.vertices):
            return None
        seen |= set(cyc.vertices)
        score += len(set(cyc.vertices) & set(subset))
    if score != packing.score:
        return None
    if not verify_hitting(graph, hitting.elements, subset, "vertex", budget):
        return None
    return {
        "graph": graph_to_obj(graph),
        "targets": sorted(subset),
        "packing_score": packing.score,
        "min_hitting_size": len(hitting.elements),
    }


def search_vertex_question_counterexample(
    n_max: int,
    seed: int = 0,
    trials: Optional[int] = None,
    budget: EnumerationBudget = DEFAULT_BUDGET,
) -> SearchReport:
    """Look for an undirected graph and vertex set where the best
    vertex-disjoint packing scores below the least vertex hitting set.

    ``trials`` None runs the full sweep over labeled simple graphs with at
    most ``n_max`` vertices and every target subset.  A positive count
    switches to seeded random sampling instead.
    """
    graphs_checked = 0
    pairs_checked = 0
    if not trials:
        for n in range(1, n_max + 1):
            names = [f"v{i}" for i in range(n)]
            for graph in _all_simple_graphs(n):
                graphs_checked += 1
                for r in range(len(names) + 1):
                    for subset in itertools.combinations(names, r):
                        pairs_checked += 1
                        hit = _vertex_gap(graph, subset, budget)
                        if hit is not None:
                            return SearchReport(
                                "exhaustive", n_max, seed, trials,
                                graphs_checked, pairs_checked, True, hit,
                            )
        return SearchReport(
            "exhaustive", n_max, seed, trials, graphs_checked, pairs_checked,
            False, None,
        )

    rng = random.Random(seed)
    for _ in range(trials):
        n = rng.randint(2, n_max)
        names = [f"v{i}" for i in range(n)]
        pairs = list(itertools.combinations(names, 2))
        p = rng.uniform(0.2, 0.9)
        edges = []
        for a, b in pairs:
            if rng.random() < p:
                edges.append((f"e{len(edges)}", a, b))
        graph = UndirectedGraph(names, edges)
        graphs_checked += 1
        subset = tuple(v for v in names if rng.random() < 0.6)
        pairs_checked += 1
        hit = _vertex_gap(graph, subset, budget)
        if hit is not None:
            return SearchReport(
                "random", n_max, seed, trials, graphs_checked, pairs_checked,
                True, hit,
            )
    return SearchReport(
        "random", n_max, seed, trials, graphs_checked, pairs_checked, False, None
    )


@dataclasses.dataclass(frozen=True)
class FixtureReport:
    """Outcome of the nullspace-support search on signed graphs."""

    found: bool
    graphs_checked: int
    vectors_checked: int
    n_max: int
    seed: int
    trials: int
    graph: Optional[BidirectedGraph]
    vector: Optional[tuple[int, ...]]
    support: tuple[str, ...]


def _zero_one_null_vectors(matrix: list[list[int]]) -> list[int]:
    """Nonzero 0/1 null vectors of an integer matrix, as column bitmasks."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    out = []
    for mask in range(1, 1 << ncols):
        ok = True
        for i in range(nrows):
            s = 0
            row = matrix[i]
            mm = mask
            while mm:
                j = (mm & -mm).bit_length() - 1
                s += row[j]
                mm &= mm - 1
            if s != 0:
                ok = False
                break
        if ok:
            out.append(mask)
    return out


def search_nullspace_noncycle_fixture(
    n_max: int = 6,
    seed: int = 0,
    trials: int = 5000,
    budget: EnumerationBudget = DEFAULT_BUDGET,
) -> FixtureReport:
    """Find a signed graph with a 0/1 incidence null vector whose support
    is not a disjoint union of cycles.

    Seeded random sweep, smallest vertex counts first, so the first find
    is reproducible.  ``trials`` bounds the attempts per vertex count.
    """
    rng = random.Random(seed)
    graphs_checked = 0
    vectors_checked = 0
    for n in range(2, n_max + 1):
        names = [f"v{i}" for i in range(n)]
        for _ in range(trials):
            m = rng.randint(n, min(2 * n, 8))
            edges = []
            signs = []
            for j in range(m):
                a, b = rng.sample(range(n), 2)
                edges.append((f"e{j}", names[a], names[b]))
                signs.append((rng.choice("+-"), rng.choice("+-")))
            graph = BidirectedGraph(names, edges, signs)
            graphs_checked += 1
            mat = incidence_matrix(graph)
            for mask in _zero_one_null_vectors(mat):
                vectors_checked += 1
                support = [graph.edges[j].id for j in range(m) if mask & (1 << j)]
                if not is_disjoint_cycle_union(graph, support, budget):
                    vec = tuple(1 if mask & (1 << j) else 0 for j in range(m))
                    return FixtureReport(
                        True, graphs_checked, vectors_checked, n_max, seed,
                        trials, graph, vec, tuple(support),
                    )
    return FixtureReport(
        False, graphs_checked, vectors_checked, n_max, seed, trials,
        None, None, (),
    )
