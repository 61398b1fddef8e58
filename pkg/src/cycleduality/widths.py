"""Cycle decompositions, cut porosity, cycle width, and the pursuit game.

A cycle decomposition arranges the graph vertices on the leaves of a
cubic tree; every tree edge induces a vertex bipartition and thus an
edge cut.  The porosity of a cut is the largest number of cut edges a
collection of vertex-disjoint cycles can use, the width of a
decomposition is its worst cut, and the cycle width of a graph is the
best width over all decompositions.

The hitting sets attached to the tree edges feed a cop strategy for the
pursuit game: cops occupy hitting sets of nested cuts, which corners the
robber in an ever smaller subtree until no strong component is left.
"""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .engines import (
    bidirected_vertex_duality,
    build_split_vertex_lp,
    directed_vertex_duality,
)
from .errors import (
    BudgetExceededError,
    CycleDualityError,
    GraphFormatError,
    IntegralityError,
)
from .graphs import (
    EdgeCut,
    Graph,
    directed_to_bidirected,
    edge_cut,
    subdivide_edges,
    vertex_split,
)
from .lp import solve
from .oracles import (
    DEFAULT_BUDGET,
    EnumerationBudget,
    enumerate_cycles,
    max_packing,
)

__all__ = [
    "CycleDecomposition",
    "decomposition_to_obj",
    "serialize_decomposition",
    "parse_decomposition",
    "enumerate_cubic_trees",
    "induced_cut",
    "PorosityResult",
    "cycle_porosity",
    "decomposition_width",
    "cycle_width_bruteforce",
    "hitting_sets_Ye",
    "strong_components",
    "GameState",
    "CopStrategy",
    "GameResult",
    "play_cops_and_robbers",
    "is_circular",
]


# ---------------------------------------------------------------------------
# cycle decompositions


@dataclasses.dataclass(frozen=True)
class CycleDecomposition:
    """Cubic tree with graph vertices on its leaves.

    The tree is stored as a parent list over nodes 0..N-1 (-1 marks the
    root; the rooting is arbitrary and carries no meaning).  leaf_map
    sends each leaf node to a distinct graph vertex.  Every internal
    node must have degree exactly 3; with one or two graph vertices the
    tree degenerates to a single leaf or a single edge.
    """

    parent: tuple[int, ...]
    leaf_map: Mapping[int, str]

    @property
    def n_nodes(self) -> int:
        return len(self.parent)

    def tree_edges(self) -> list[tuple[int, int]]:
        """All tree edges as sorted pairs, in sorted order."""
        out = []
        for i, p in enumerate(self.parent):
            if p >= 0:
                out.append((min(i, p), max(i, p)))
        out.sort()
        return out

    def _adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n_nodes)]
        for i, j in self.tree_edges():
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def validate(self, graph: Graph) -> None:
        """Check tree shape, degrees, and the leaf bijection."""
        n = self.n_nodes
        if n == 0:
            if graph.n == 0 and not self.leaf_map:
                return
            raise GraphFormatError("empty decomposition for a non-empty graph")
        roots = [i for i, p in enumerate(self.parent) if p == -1]
        if len(roots) != 1:
            raise GraphFormatError("decomposition must have exactly one root")
        for i, p in enumerate(self.parent):
            if p != -1 and not (0 <= p < n and p != i):
                raise GraphFormatError(f"bad parent pointer at node {i}")
        adj = self._adjacency()
        seen = {roots[0]}
        stack = [roots[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != n:
            raise GraphFormatError("decomposition tree is not connected")
        leaves = {i for i in range(n) if len(adj[i]) <= 1}
        for i in range(n):
            if i not in leaves and len(adj[i]) != 3:
                raise GraphFormatError(
                    f"internal node {i} has degree {len(adj[i])}, expected 3"
                )
        if set(self.leaf_map) != leaves:
            raise GraphFormatError("leaf map keys must be exactly the leaves")
        values = list(self.leaf_map.values())
        if len(set(values)) != len(values) or set(values) != set(graph.vertices):
            raise GraphFormatError("leaf map must biject leaves onto vertices")

    def sides(self, tree_edge: tuple[int, int]) -> tuple[frozenset[int], frozenset[int]]:
        """Node sets of the two components of the tree minus the edge.

        The first side is the component containing the smaller endpoint.
        """
        i, j = min(tree_edge), max(tree_edge)
        if (i, j) not in set(self.tree_edges()):
            raise GraphFormatError(f"({i}, {j}) is not a tree edge")
        adj = self._adjacency()
        seen = {i}
        stack = [i]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if (x, y) in ((i, j), (j, i)):
                    continue
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        side_a = frozenset(seen)
        side_b = frozenset(range(self.n_nodes)) - side_a
        return side_a, side_b

    def side_vertices(self, nodes: Iterable[int]) -> frozenset[str]:
        return frozenset(self.leaf_map[x] for x in nodes if x in self.leaf_map)


def decomposition_to_obj(dec: CycleDecomposition) -> dict:
    return {
        "parent": list(dec.parent),
        "leaf_map": {str(k): v for k, v in sorted(dec.leaf_map.items())},
    }


def serialize_decomposition(dec: CycleDecomposition) -> str:
    return json.dumps(decomposition_to_obj(dec), indent=2, sort_keys=True) + "\n"


def parse_decomposition(data: Union[str, bytes, dict]) -> CycleDecomposition:
    if isinstance(data, (str, bytes)):
        try:
            obj = json.loads(data)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid decomposition JSON: {exc}") from exc
    else:
        obj = data
    if not isinstance(obj, dict) or "parent" not in obj or "leaf_map" not in obj:
        raise GraphFormatError("decomposition needs 'parent' and 'leaf_map'")
    try:
        parent = tuple(int(x) for x in obj["parent"])
        leaf_map = {int(k): str(v) for k, v in obj["leaf_map"].items()}
    except (TypeError, ValueError) as exc:
        raise GraphFormatError(f"malformed decomposition: {exc}") from exc
    return CycleDecomposition(parent, leaf_map)


def _edge_lists_to_parents(n_nodes: int, edges: Sequence[tuple[int, int]]) -> tuple[int, ...]:
    adj: list[list[int]] = [[] for _ in range(n_nodes)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    parent = [-2] * n_nodes
    parent[0] = -1
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if parent[y] == -2:
                parent[y] = x
                stack.append(y)
    return tuple(parent)


def enumerate_cubic_trees(leaf_names: Sequence[str]) -> list[CycleDecomposition]:
    """All cubic trees with the given labeled leaves.

    Leaf node i carries leaf_names[i]; internal nodes get ids from
    len(leaf_names) upward.  The count is the double factorial
    1, 1, 1, 3, 15, 105, 945, 10395 for 1..8 leaves.
    """
    names = list(leaf_names)
    if len(set(names)) != len(names):
        raise GraphFormatError("leaf names must be distinct")
    L = len(names)
    if L == 0:
        return []
    if L == 1:
        return [CycleDecomposition((-1,), {0: names[0]})]
    if L == 2:
        return [CycleDecomposition((-1, 0), {0: names[0], 1: names[1]})]
    trees: list[list[tuple[int, int]]] = [[(0, 1)]]
    n_nodes = 2
    for leaf in range(2, L):
        internal = L + (leaf - 2)
        grown: list[list[tuple[int, int]]] = []
        for t in trees:
            for k, (a, b) in enumerate(t):
                nt = t[:k] + t[k + 1 :]
                nt.extend([(a, internal), (b, internal), (leaf, internal)])
                grown.append(nt)
        trees = grown
        n_nodes = internal + 1
    leaf_map = {i: names[i] for i in range(L)}
    return [
        CycleDecomposition(_edge_lists_to_parents(n_nodes, t), leaf_map)
        for t in trees
    ]


def induced_cut(graph: Graph, dec: CycleDecomposition, tree_edge: tuple[int, int]) -> EdgeCut:
    """Edge cut induced by removing one tree edge from the decomposition.

    Side A holds the vertices on the leaves of the component containing
    the smaller endpoint of the tree edge.
    """
    side_nodes, _ = dec.sides(tree_edge)
    return edge_cut(graph, dec.side_vertices(side_nodes))


# ---------------------------------------------------------------------------
# porosity


@dataclasses.dataclass(frozen=True)
class PorosityResult:
    """Porosity of one cut, with the evidence that produced it.

    cross_checked is True when the search route and the LP route both
    ran and agreed.  When the search budget runs out the LP value is
    returned alone and cross_checked stays False.
    """

    value: int
    oracle_value: Optional[int]
    lp_value: Optional[Fraction]
    cross_checked: bool


def _porosity_lp_value(graph: Graph, cut_edges: Sequence[str]) -> Fraction:
    sub = subdivide_edges(graph, cut_edges)
    base = sub.graph
    if base.kind == "directed":
        base = directed_to_bidirected(base)
    split = vertex_split(base)
    f_ids = {split.split_edge[w] for w in sub.new_vertices}
    lp = build_split_vertex_lp(split.graph, f_ids)
    sol = solve(lp)
    if sol.status != "optimal":
        raise IntegralityError(f"porosity LP ended with status {sol.status}")
    return sol.objective


def cycle_porosity(
    graph: Graph,
    cut: EdgeCut,
    budget: EnumerationBudget = DEFAULT_BUDGET,
    method: str = "both",
) -> PorosityResult:
    """Largest number of cut edges used by vertex-disjoint cycles.

    Two independent routes: a direct search for the best vertex-disjoint
    cycle collection, and an LP whose targets are subdivision points
    placed on the cut edges.  With method "both" the routes must agree;
    a search-budget overrun falls back to the LP value, unverified.
    Signed graphs outside the image of a digraph can make the LP side
    overshoot the combinatorial value, which surfaces as
    IntegralityError here.
    """
    if graph.kind == "undirected":
        raise GraphFormatError("porosity needs a directed or signed graph")
    if method not in ("both", "oracle", "lp"):
        raise ValueError(f"unknown porosity method {method!r}")
    cut_edges = tuple(cut.edges)
    if not cut_edges:
        return PorosityResult(0, 0, Fraction(0), True)
    oracle_value: Optional[int] = None
    lp_value: Optional[Fraction] = None
    if method in ("both", "oracle"):
        try:
            cert = max_packing(graph, cut_edges, "edges", "vertex", budget)
            oracle_value = cert.score
        except BudgetExceededError:
            if method == "oracle":
                raise
    if method in ("both", "lp") or oracle_value is None:
        lp_value = _porosity_lp_value(graph, cut_edges)
    if oracle_value is None:
        if lp_value is None or lp_value.denominator != 1:
            raise IntegralityError(f"fractional porosity LP value {lp_value}")
        return PorosityResult(int(lp_value), None, lp_value, False)
    if method == "oracle":
        return PorosityResult(oracle_value, oracle_value, None, False)
    if lp_value != oracle_value:
        raise IntegralityError(
            f"porosity routes disagree: search {oracle_value}, LP {lp_value}"
        )
    return PorosityResult(oracle_value, oracle_value, lp_value, True)


def decomposition_width(
    graph: Graph,
    dec: CycleDecomposition,
    budget: EnumerationBudget = DEFAULT_BUDGET,
    method: str = "both",
) -> int:
    """Worst cut porosity over the decomposition's tree edges."""
    dec.validate(graph)
    width = 0
    for te in dec.tree_edges():
        cut = induced_cut(graph, dec, te)
        width = max(width, cycle_porosity(graph, cut, budget, method).value)
    return width


def cycle_width_bruteforce(
    graph: Graph,
    n_cap: int = 8,
    budget: EnumerationBudget = DEFAULT_BUDGET,
) -> tuple[int, CycleDecomposition]:
    """Minimum decomposition width by sweeping all cubic trees.

    The tree count is a double factorial in the vertex count, so the
    sweep refuses graphs above n_cap.  Porosity values are computed by
    the search route and cached per bipartition; the winning
    decomposition is re-checked through both porosity routes before it
    is returned.
    """
    if graph.kind == "undirected":
        raise GraphFormatError("cycle width needs a directed or signed graph")
    if graph.n > n_cap:
        raise BudgetExceededError("decomposition-leaves", n_cap)
    if graph.n == 0:
        return 0, CycleDecomposition((), {})
    cache: dict[frozenset[str], int] = {}

    def porosity_of(side_a: frozenset[str]) -> int:
        anchor = graph.vertices[0]
        key = side_a if anchor in side_a else frozenset(graph.vertices) - side_a
        if key not in cache:
            cut = edge_cut(graph, key)
            cache[key] = cycle_porosity(graph, cut, budget, method="oracle").value
        return cache[key]

    best_width: Optional[int] = None
    best_dec: Optional[CycleDecomposition] = None
    for dec in enumerate_cubic_trees(graph.vertices):
        width = 0
        for te in dec.tree_edges():
            side_nodes, _ = dec.sides(te)
            width = max(width, porosity_of(dec.side_vertices(side_nodes)))
            if best_width is not None and width >= best_width:
                break
        if best_width is None or width < best_width:
            best_width = width
            best_dec = dec
    assert best_width is not None and best_dec is not None
    check = decomposition_width(graph, best_dec, budget, method="both")
    assert check == best_width, "porosity routes disagree on the best tree"
    return best_width, best_dec


# ---------------------------------------------------------------------------
# hitting sets per tree edge


def _cycles_through_edges(graph: Graph, edge_ids, budget: EnumerationBudget):
    wanted = set(edge_ids)
    return [
        c for c in enumerate_cycles(graph, budget) if wanted.intersection(c.edges)
    ]


def hitting_sets_Ye(
    graph: Graph,
    dec: CycleDecomposition,
    budget: EnumerationBudget = DEFAULT_BUDGET,
) -> dict[tuple[int, int], frozenset[str]]:
    """One vertex set per tree edge, hitting every cycle through its cut.

    Each cut edge gets a subdivision point; the vertex duality engine on
    the subdivided graph with those points as targets yields a hitting
    set, whose subdivision points are then replaced by the cut-edge
    endpoint on side A.  Redundant vertices are pruned in canonical
    order, and each final set is re-verified against the cycles through
    its cut and checked against the decomposition width.
    """
    dec.validate(graph)
    if graph.kind == "undirected":
        raise GraphFormatError("hitting sets need a directed or signed graph")
    width = decomposition_width(graph, dec, budget, method="oracle")
    out: dict[tuple[int, int], frozenset[str]] = {}
    for te in dec.tree_edges():
        cut = induced_cut(graph, dec, te)
        if not cut.edges:
            out[te] = frozenset()
            continue
        sub = subdivide_edges(graph, cut.edges)
        targets = sub.new_vertices
        if sub.graph.kind == "directed":
            rep = directed_vertex_duality(sub.graph, targets, budget, verify="oracle")
        else:
            rep = bidirected_vertex_duality(sub.graph, targets, budget, verify="oracle")
        mapped = set()
        for v in rep.hitting.elements:
            eid = sub.source_edge.get(v)
            if eid is None:
                mapped.add(v)
            else:
                e = graph.edges[graph.edge_index[eid]]
                mapped.add(e.u if e.u in cut.side_a else e.v)
        cycles = _cycles_through_edges(graph, cut.edges, budget)
        kept = sorted(mapped, key=graph.vertex_index.__getitem__)
        for v in list(kept):
            trial = [u for u in kept if u != v]
            if all(set(c.vertices).intersection(trial) for c in cycles):
                kept = trial
        y = frozenset(kept)
        if not all(set(c.vertices).intersection(y) for c in cycles):
            raise CycleDualityError(f"hitting set for tree edge {te} fails to hit")
        if len(y) > width:
            raise CycleDualityError(
                f"hitting set for tree edge {te} exceeds the width {width}"
            )
        out[te] = y
    return out


# ---------------------------------------------------------------------------
# strong components


def _directed_reach(graph: Graph, keep: set[str]) -> dict[str, set[str]]:
    succ: dict[str, list[str]] = {v: [] for v in keep}
    for e in graph.edges:
        if e.u in keep and e.v in keep:
            succ[e.u].append(e.v)
    reach: dict[str, set[str]] = {}
    for s in keep:
        seen = set()
        stack = [s]
        while stack:
            x = stack.pop()
            for y in succ[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        reach[s] = seen
    return reach


def _signed_reach(graph: Graph, keep: set[str]) -> dict[str, set[str]]:
    # moves[v] = (edge index, other endpoint, sign here, sign there)
    moves: dict[str, list[tuple[int, str, str, str]]] = {v: [] for v in keep}
    for j, e in enumerate(graph.edges):
        if e.u in keep and e.v in keep:
            su, sv = graph.signs[j]
            moves[e.u].append((j, e.v, su, sv))
            moves[e.v].append((j, e.u, sv, su))
    reach: dict[str, set[str]] = {v: set() for v in keep}

    def walk(start: str, at: str, arrival: str, visited: set[str]) -> None:
        for _, other, s_here, s_there in moves[at]:
            if other in visited:
                continue
            if at != start and s_here == arrival:
                continue  # internal vertices must switch signs
            reach[start].add(other)
            visited.add(other)
            walk(start, other, s_there, visited)
            visited.discard(other)

    for s in keep:
        walk(s, s, "", {s})
    return reach


def strong_components(
    graph: Graph, removed: Iterable[str] = ()
) -> list[tuple[str, ...]]:
    """Strong components of the graph with some vertices removed.

    Directed graphs use ordinary mutual reachability.  For signed graphs
    the declared stand-in applies: u reaches v when a simple path exists
    whose interior switches signs at every vertex, and components are
    the connected components of the mutual-reachability relation.  That
    relation is weaker than any notion tied to cycles, so signed results
    must not be read as the components of the cited game literature.
    """
    if graph.kind == "undirected":
        raise GraphFormatError("strong components need a directed or signed graph")
    gone = set(removed)
    for v in gone:
        if v not in graph.vertex_index:
            raise GraphFormatError(f"cannot remove unknown vertex {v!r}")
    keep = {v for v in graph.vertices if v not in gone}
    if not keep:
        return []
    reach = (
        _directed_reach(graph, keep)
        if graph.kind == "directed"
        else _signed_reach(graph, keep)
    )
    order = sorted(keep, key=graph.vertex_index.__getitem__)
    comp_of: dict[str, int] = {}
    comps: list[list[str]] = []
    for v in order:
        if v in comp_of:
            continue
        group = [v]
        comp_of[v] = len(comps)
        for u in order:
            if u in comp_of or u == v:
                continue
            linked = any(
                w in reach[u] and u in reach[w] for w in group
            )
            if linked:
                comp_of[u] = len(comps)
                group.append(u)
        comps.append(group)
    return [tuple(g) for g in comps]


# ---------------------------------------------------------------------------
# the pursuit game


@dataclasses.dataclass(frozen=True)
class GameState:
    """One game round: the cop set, the robber's component, the phase.

    A robber of None marks the catch: no legal component was left.
    """

    round: int
    cops: frozenset[str]
    robber: Optional[tuple[str, ...]]
    phase: str


class CopStrategy:
    """Tree-guided cop strategy driven by the per-cut hitting sets.

    The cops hold the hitting set of a focus cut, expand to the hitting
    sets of the two neighbouring cuts on the robber's side, then drop
    back to whichever of the two now confines the robber.  Each phase
    strictly shrinks the robber's subtree, so the pursuit ends.  With
    width 0 there are no cycles and a single cop sweeps instead.

    On signed graphs the stand-in strong components can straddle a cut
    without using any cycle; the strategy then has no defined move and
    raises CycleDualityError.
    """

    def __init__(
        self,
        graph: Graph,
        decomposition: CycleDecomposition,
        y_map: Mapping[tuple[int, int], frozenset[str]],
        width: int,
    ):
        decomposition.validate(graph)
        self.graph = graph
        self.decomposition = decomposition
        self.y_map = dict(y_map)
        self.width = width
        self.cop_budget = 3 * max(width, 1)
        self._edges = decomposition.tree_edges()
        if set(self.y_map) != set(self._edges):
            raise GraphFormatError("hitting-set map must cover the tree edges")
        if width == 0:
            for comp in strong_components(graph):
                if len(comp) > 1:
                    raise CycleDualityError(
                        "width-0 sweep needs singleton strong components; "
                        "this signed graph has a larger one"
                    )

    @classmethod
    def from_decomposition(
        cls,
        graph: Graph,
        decomposition: CycleDecomposition,
        budget: EnumerationBudget = DEFAULT_BUDGET,
    ) -> "CopStrategy":
        y_map = hitting_sets_Ye(graph, decomposition, budget)
        width = decomposition_width(graph, decomposition, budget, method="oracle")
        return cls(graph, decomposition, y_map, width)

    def initial(self) -> tuple[frozenset[str], tuple, str]:
        """First cop position, initial state, and phase label."""
        if self.width == 0 or not self._edges:
            return frozenset(), ("sweep",), "initial"
        f = self._edges[0]
        return self.y_map[f], ("focus", f, self.decomposition.n_nodes + 1), "initial"

    def _robber_side(
        self, f: tuple[int, int], robber: tuple[str, ...]
    ) -> frozenset[int]:
        dec = self.decomposition
        side_a, side_b = dec.sides(f)
        rset = set(robber)
        if rset <= dec.side_vertices(side_a):
            return side_a
        if rset <= dec.side_vertices(side_b):
            return side_b
        raise CycleDualityError(
            "robber component straddles the focus cut; the strategy is only "
            "defined when components respect cuts (always true for digraphs)"
        )

    def respond(
        self, state: tuple, robber: tuple[str, ...]
    ) -> tuple[frozenset[str], tuple, str]:
        """Next cop position given the robber's current component."""
        dec = self.decomposition
        if state[0] == "sweep":
            target = min(robber, key=self.graph.vertex_index.__getitem__)
            return frozenset([target]), ("sweep",), "sweep"
        if state[0] != "focus":
            raise CycleDualityError(f"no move defined in state {state!r}")
        _, f, bound = state
        side = self._robber_side(f, robber)
        if len(side) >= bound:
            raise CycleDualityError("robber subtree failed to shrink")
        if len(side) == 1:
            (t,) = side
            cops = self.y_map[f] | {dec.leaf_map[t]}
            return cops, ("caught", f), "close"
        t_i = f[0] if f[0] in side else f[1]
        branches = sorted(
            (min(t_i, nb), max(t_i, nb))
            for nb in dec._adjacency()[t_i]
            if (min(t_i, nb), max(t_i, nb)) != f
        )
        f1, f2 = branches
        cops = self.y_map[f] | self.y_map[f1] | self.y_map[f2]
        return cops, ("expand", f, f1, f2, len(side), t_i), "expand"

    def refocus(
        self, state: tuple, robber: tuple[str, ...]
    ) -> tuple[frozenset[str], tuple, str]:
        _, f, f1, f2, bound, t_i = state
        dec = self.decomposition
        rset = set(robber)
        for fj in (f1, f2):
            side_a, side_b = dec.sides(fj)
            far = side_a if t_i in side_b else side_b
            if rset <= dec.side_vertices(far):
                return self.y_map[fj], ("focus", fj, bound), "refocus"
        raise CycleDualityError(
            "robber component is in neither branch subtree; the strategy is "
            "only defined when components respect cuts"
        )

    def next_move(
        self, state: tuple, robber: tuple[str, ...]
    ) -> tuple[frozenset[str], tuple, str]:
        if state and state[0] == "expand":
            return self.refocus(state, robber)
        return self.respond(state, robber)


@dataclasses.dataclass(frozen=True)
class GameResult:
    """Outcome of a pursuit: every explored line ends with a catch.

    The transcript lists the rounds of the principal line (the longest
    one, ties broken by exploration order); lines counts all adversarial
    lines explored.
    """

    caught: bool
    rounds: int
    max_cops: int
    lines: int
    transcript: tuple[GameState, ...]

    def to_obj(self) -> list[dict]:
        return [
            {
                "round": st.round,
                "cops": sorted(st.cops),
                "robber-component": None if st.robber is None else list(st.robber),
                "strategy-phase": st.phase,
            }
            for st in self.transcript
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), indent=2, sort_keys=True) + "\n"


def _legal_replies(
    graph: Graph,
    cops_prev: frozenset[str],
    robber: tuple[str, ...],
    cops_next: frozenset[str],
) -> list[tuple[str, ...]]:
    meet = cops_prev & cops_next
    holding = None
    for comp in strong_components(graph, meet):
        if robber[0] in comp:
            holding = set(comp)
            break
    if holding is None or not set(robber) <= holding:
        raise CycleDualityError("robber component lost between rounds")
    return [
        comp
        for comp in strong_components(graph, cops_next)
        if set(comp) <= holding
    ]


def play_cops_and_robbers(
    graph: Graph,
    strategy: CopStrategy,
    robber: Union[str, Sequence[Iterable[str]]] = "adversarial",
) -> GameResult:
    """Run the pursuit to the catch, against every robber line or a script.

    The adversarial robber branches over every legal component at every
    round; all lines must end with a catch within the cop budget, or the
    run fails.  A scripted robber supplies its component choices up
    front and any illegal choice raises CycleDualityError.
    """
    if graph.n == 0:
        raise GraphFormatError("the game needs at least one vertex")
    round_cap = 4 * max(strategy.decomposition.n_nodes, 1) + 8
    budget_cap = 1 if strategy.width == 0 else 3 * strategy.width
    script = None if robber == "adversarial" else [tuple(sorted(r)) for r in robber]

    def check_cops(cops: frozenset[str]) -> None:
        if len(cops) > budget_cap:
            raise CycleDualityError(
                f"cop set {sorted(cops)} exceeds the budget {budget_cap}"
            )

    cops0, state0, phase0 = strategy.initial()
    check_cops(cops0)
    comps0 = strong_components(graph, cops0)

    # memo tails carry (cops, robber-or-None, phase) without round numbers,
    # so a hit at a different depth still splices correctly
    memo: dict = {}

    def explore(cops: frozenset[str], state: tuple, robber_comp: tuple[str, ...], depth: int):
        # returns (max cops, tail length, lines, tail rows)
        if depth > round_cap:
            raise CycleDualityError("pursuit failed to terminate")
        key = (cops, state, robber_comp)
        if key in memo:
            return memo[key]
        cops_next, state_next, phase = strategy.next_move(state, robber_comp)
        check_cops(cops_next)
        replies = _legal_replies(graph, cops, robber_comp, cops_next)
        if not replies:
            result = (len(cops_next), 1, 1, ((cops_next, None, phase),))
            memo[key] = result
            return result
        best = None
        total_lines = 0
        worst_cops = len(cops_next)
        for rep in replies:
            sub = explore(cops_next, state_next, rep, depth + 1)
            worst_cops = max(worst_cops, sub[0])
            total_lines += sub[2]
            if best is None or sub[1] + 1 > best[1]:
                best = (sub, sub[1] + 1, rep)
        assert best is not None
        sub, length, rep = best
        result = (
            worst_cops,
            length,
            total_lines,
            ((cops_next, rep, phase),) + sub[3],
        )
        memo[key] = result
        return result

    def assemble(first_robber, tail) -> tuple[GameState, ...]:
        rows = [GameState(0, cops0, first_robber, phase0)]
        for i, (cops, rob, phase) in enumerate(tail, start=1):
            rows.append(GameState(i, cops, rob, phase))
        return tuple(rows)

    if script is not None:
        if not script:
            raise CycleDualityError("scripted robber must choose a start component")
        first = script[0]
        if first not in comps0:
            raise CycleDualityError(f"illegal scripted robber start {list(first)}")
        cops, state, robber_comp = cops0, state0, first
        tail = []
        step = 1
        max_cops = len(cops0)
        while True:
            cops_next, state, phase = strategy.next_move(state, robber_comp)
            check_cops(cops_next)
            max_cops = max(max_cops, len(cops_next))
            replies = _legal_replies(graph, cops, robber_comp, cops_next)
            if not replies:
                tail.append((cops_next, None, phase))
                break
            if step >= len(script):
                raise CycleDualityError("scripted robber ran out of moves")
            choice = script[step]
            if choice not in replies:
                raise CycleDualityError(f"illegal scripted robber move {list(choice)}")
            tail.append((cops_next, choice, phase))
            cops, robber_comp = cops_next, choice
            step += 1
            if step > round_cap:
                raise CycleDualityError("pursuit failed to terminate")
        return GameResult(True, len(tail), max_cops, 1, assemble(first, tail))

    if not comps0:
        rows = (GameState(0, cops0, None, phase0),)
        return GameResult(True, 0, len(cops0), 1, rows)
    best = None
    total_lines = 0
    worst = len(cops0)
    for comp in comps0:
        sub = explore(cops0, state0, comp, 0)
        worst = max(worst, sub[0])
        total_lines += sub[2]
        if best is None or sub[1] > best[0][1]:
            best = (sub, comp)
    assert best is not None
    sub, comp = best
    return GameResult(True, sub[1], worst, total_lines, assemble(comp, sub[3]))


# ---------------------------------------------------------------------------
# hypothesis predicate


def is_circular(graph: Graph, budget: EnumerationBudget = DEFAULT_BUDGET) -> bool:
    """Whether the graph is connected and every edge lies on some cycle."""
    if graph.n == 0:
        return True
    seen = {graph.vertices[0]}
    stack = [graph.vertices[0]]
    nbrs: dict[str, list[str]] = {v: [] for v in graph.vertices}
    for e in graph.edges:
        nbrs[e.u].append(e.v)
        nbrs[e.v].append(e.u)
    while stack:
        x = stack.pop()
        for y in nbrs[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != graph.n:
        return False
    covered: set[str] = set()
    for c in enumerate_cycles(graph, budget):
        covered.update(c.edges)
    return covered == set(graph.edge_index)
