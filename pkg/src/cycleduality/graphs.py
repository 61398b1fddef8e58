"""Graph types: undirected, directed, and signed (bidirected) multigraphs.

All three kinds share the same storage shape: an ordered tuple of vertex
ids and an ordered tuple of edges (id, u, v).  Signed graphs additionally
carry one sign per half-edge.  Input order is the canonical order used by
every deterministic algorithm downstream, so graphs never reorder what
they are given.  Loops are rejected everywhere; parallel edges are fine.
"""

from __future__ import annotations

import dataclasses
import json
from typing import Iterable, Mapping, Sequence, Union

from .errors import GraphFormatError

__all__ = [
    "PLUS",
    "MINUS",
    "flip_sign",
    "Edge",
    "UndirectedGraph",
    "DirectedGraph",
    "BidirectedGraph",
    "Graph",
    "SignedCycle",
    "EdgeCut",
    "edge_cut",
    "incidence_matrix",
    "directed_to_bidirected",
    "vertex_split",
    "SplitResult",
    "subdivide_edges",
    "SubdivisionResult",
    "parse_graph",
    "graph_to_obj",
    "serialize_graph",
]

PLUS = "+"
MINUS = "-"
_SIGNS = (PLUS, MINUS)


def flip_sign(sign: str) -> str:
    return MINUS if sign == PLUS else PLUS


@dataclasses.dataclass(frozen=True)
class Edge:
    """One edge; for directed graphs u is the tail and v the head."""

    id: str
    u: str
    v: str


EdgeSpec = Union[Edge, Sequence[str]]


class _BaseGraph:
    kind = "abstract"

    def __init__(self, vertices: Sequence[str], edges: Sequence[EdgeSpec]):
        self.vertices: tuple[str, ...] = tuple(vertices)
        self.edges: tuple[Edge, ...] = tuple(
            e if isinstance(e, Edge) else Edge(*e) for e in edges
        )
        self.vertex_index: dict[str, int] = {}
        for i, v in enumerate(self.vertices):
            if not isinstance(v, str):
                raise GraphFormatError(f"vertex id must be a string: {v!r}")
            if v in self.vertex_index:
                raise GraphFormatError(f"duplicate vertex id: {v!r}")
            self.vertex_index[v] = i
        self.edge_index: dict[str, int] = {}
        for i, e in enumerate(self.edges):
            if not isinstance(e.id, str):
                raise GraphFormatError(f"edge id must be a string: {e.id!r}")
            if e.id in self.edge_index:
                raise GraphFormatError(f"duplicate edge id: {e.id!r}")
            if e.u not in self.vertex_index or e.v not in self.vertex_index:
                raise GraphFormatError(f"edge {e.id!r} has an unknown endpoint")
            if e.u == e.v:
                raise GraphFormatError(f"edge {e.id!r} is a loop; loops are not allowed")
            self.edge_index[e.id] = i

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, m={self.m})"


class UndirectedGraph(_BaseGraph):
    kind = "undirected"


class DirectedGraph(_BaseGraph):
    kind = "directed"


class BidirectedGraph(_BaseGraph):
    """Undirected multigraph plus a sign for each half-edge.

    ``signs[i]`` is the pair (sign at edges[i].u, sign at edges[i].v).
    """

    kind = "bidirected"

    def __init__(
        self,
        vertices: Sequence[str],
        edges: Sequence[EdgeSpec],
        signs: Sequence[tuple[str, str]],
    ):
        super().__init__(vertices, edges)
        self.signs: tuple[tuple[str, str], ...] = tuple(
            (su, sv) for su, sv in signs
        )
        if len(self.signs) != len(self.edges):
            raise GraphFormatError("need exactly one sign pair per edge")
        for e, (su, sv) in zip(self.edges, self.signs):
            if su not in _SIGNS or sv not in _SIGNS:
                raise GraphFormatError(f"edge {e.id!r} has invalid signs {(su, sv)!r}")

    def sign_at(self, vertex: str, edge_id: str) -> str:
        """Sign of the half-edge of ``edge_id`` at ``vertex``."""
        e = self.edges[self.edge_index[edge_id]]
        su, sv = self.signs[self.edge_index[edge_id]]
        if vertex == e.u:
            return su
        if vertex == e.v:
            return sv
        raise GraphFormatError(f"{vertex!r} is not an endpoint of {edge_id!r}")


Graph = Union[UndirectedGraph, DirectedGraph, BidirectedGraph]


# ---------------------------------------------------------------------------
# cycles and cuts


@dataclasses.dataclass(frozen=True)
class SignedCycle:
    """A vertex-simple cycle, stored as aligned vertex and edge tuples.

    ``edges[i]`` joins ``vertices[i]`` to ``vertices[(i+1) % k]``; for
    directed graphs it is oriented that way.  In a signed graph the cycle
    must switch sign at every vertex (half-edge signs of the arriving and
    departing edge differ).  Length-2 cycles use two distinct parallel
    edges; length 1 cannot occur because loops are excluded.
    """

    vertices: tuple[str, ...]
    edges: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    @property
    def edge_set(self) -> frozenset[str]:
        return frozenset(self.edges)

    def validate(self, graph: Graph) -> None:
        """Raise ValueError unless this is a valid cycle of ``graph``."""
        k = len(self.edges)
        if k < 2 or len(self.vertices) != k:
            raise ValueError(f"cycle needs k>=2 aligned vertices/edges, got {self}")
        if len(set(self.vertices)) != k:
            raise ValueError(f"cycle repeats a vertex: {self}")
        if len(set(self.edges)) != k:
            raise ValueError(f"cycle repeats an edge: {self}")
        for v in self.vertices:
            if v not in graph.vertex_index:
                raise ValueError(f"unknown vertex {v!r} in cycle")
        for i, eid in enumerate(self.edges):
            if eid not in graph.edge_index:
                raise ValueError(f"unknown edge {eid!r} in cycle")
            e = graph.edges[graph.edge_index[eid]]
            a, b = self.vertices[i], self.vertices[(i + 1) % k]
            if graph.kind == "directed":
                if (e.u, e.v) != (a, b):
                    raise ValueError(f"edge {eid!r} does not go {a!r}->{b!r}")
            elif {e.u, e.v} != {a, b}:
                raise ValueError(f"edge {eid!r} does not join {a!r},{b!r}")
        if graph.kind == "bidirected":
            for j in range(k):
                v = self.vertices[j]
                arriving = self.edges[(j - 1) % k]
                departing = self.edges[j]
                if graph.sign_at(v, arriving) == graph.sign_at(v, departing):
                    raise ValueError(f"cycle does not switch sign at {v!r}: {self}")

    def canonical(self, graph: Graph) -> "SignedCycle":
        """Rotate (and for undirected kinds possibly reverse) to canonical form.

        Canonical: starts at the smallest vertex in graph order.  For
        undirected and signed graphs the direction is fixed by the smaller
        second-vertex index; two-cycles visit the same two vertices either
        way, so they fall back to first edge before last edge in graph
        order.  Directed cycles only rotate.
        """
        k = len(self.edges)
        vidx = graph.vertex_index
        p = min(range(k), key=lambda i: vidx[self.vertices[i]])
        vs = self.vertices[p:] + self.vertices[:p]
        es = self.edges[p:] + self.edges[:p]
        if graph.kind != "directed":
            if k == 2:
                eidx = graph.edge_index
                flip = eidx[es[0]] > eidx[es[-1]]
            else:
                flip = vidx[vs[1]] > vidx[vs[-1]]
            if flip:
                # reverse traversal: same start, edges walked backwards
                vs = (vs[0],) + tuple(reversed(vs[1:]))
                es = tuple(reversed(es))
        return SignedCycle(vs, es)


@dataclasses.dataclass(frozen=True)
class EdgeCut:
    """A vertex bipartition plus the edges crossing it (in graph order)."""

    side_a: frozenset[str]
    side_b: frozenset[str]
    edges: tuple[str, ...]


def edge_cut(graph: Graph, side_a: Iterable[str]) -> EdgeCut:
    """Build the EdgeCut induced by the bipartition (side_a, rest)."""
    a = frozenset(side_a)
    for v in a:
        if v not in graph.vertex_index:
            raise GraphFormatError(f"cut side contains unknown vertex {v!r}")
    b = frozenset(graph.vertices) - a
    crossing = tuple(
        e.id for e in graph.edges if (e.u in a) != (e.v in a)
    )
    return EdgeCut(a, b, crossing)


# ---------------------------------------------------------------------------
# incidence matrices


def incidence_matrix(graph: Graph) -> list[list[int]]:
    """Vertex-by-edge incidence matrix with integer entries.

    Directed: +1 at the head, -1 at the tail.  Signed: the half-edge sign
    as +-1.  Undirected graphs have no canonical signing, so they are
    rejected here.
    """
    if graph.kind == "undirected":
        raise GraphFormatError("undirected graphs have no signed incidence matrix")
    rows = [[0] * graph.m for _ in range(graph.n)]
    for j, e in enumerate(graph.edges):
        ui = graph.vertex_index[e.u]
        vi = graph.vertex_index[e.v]
        if graph.kind == "directed":
            rows[ui][j] = -1
            rows[vi][j] = 1
        else:
            su, sv = graph.signs[j]
            rows[ui][j] = 1 if su == PLUS else -1
            rows[vi][j] = 1 if sv == PLUS else -1
    return rows


# ---------------------------------------------------------------------------
# constructions


def directed_to_bidirected(digraph: DirectedGraph) -> BidirectedGraph:
    """Signed image of a digraph: + at each head, - at each tail.

    Vertex and edge ids carry over unchanged, so directed cycles and the
    sign-switching cycles of the image coincide edge-for-edge, and the two
    incidence matrices are equal.
    """
    signs = [(MINUS, PLUS) for _ in digraph.edges]
    return BidirectedGraph(digraph.vertices, digraph.edges, signs)


def _fresh(base: str, taken: set) -> str:
    name = base
    while name in taken:
        name += "'"
    taken.add(name)
    return name


@dataclasses.dataclass(frozen=True)
class SplitResult:
    """Vertex-split graph plus the correspondence maps back to the input."""

    graph: BidirectedGraph
    plus_vertex: Mapping[str, str]
    minus_vertex: Mapping[str, str]
    split_edge: Mapping[str, str]


def vertex_split(graph: BidirectedGraph) -> SplitResult:
    """Split every vertex v into a positive copy and a negative copy.

    The two copies are joined by a new split edge signed - at the positive
    copy and + at the negative copy.  Each original half-edge moves to the
    copy matching its sign and keeps that sign.  Consequently every vertex
    of the result sees original half-edges of one sign only, and walks
    through v in the original correspond to walks v_plus - v_minus through
    the split edge.
    """
    plus: dict[str, str] = {}
    minus: dict[str, str] = {}
    new_vertices: list[str] = []
    for v in graph.vertices:
        plus[v] = v + "+"
        minus[v] = v + "-"
        new_vertices.append(plus[v])
        new_vertices.append(minus[v])
    new_edges: list[Edge] = []
    new_signs: list[tuple[str, str]] = []
    for e, (su, sv) in zip(graph.edges, graph.signs):
        a = plus[e.u] if su == PLUS else minus[e.u]
        b = plus[e.v] if sv == PLUS else minus[e.v]
        new_edges.append(Edge(e.id, a, b))
        new_signs.append((su, sv))
    taken = set(graph.edge_index)
    split_edge: dict[str, str] = {}
    for v in graph.vertices:
        sid = _fresh("split:" + v, taken)
        split_edge[v] = sid
        new_edges.append(Edge(sid, plus[v], minus[v]))
        new_signs.append((MINUS, PLUS))
    return SplitResult(
        BidirectedGraph(new_vertices, new_edges, new_signs),
        plus,
        minus,
        split_edge,
    )


@dataclasses.dataclass(frozen=True)
class SubdivisionResult:
    """Subdivided graph, the new vertices, and per-vertex correspondence.

    ``source_edge`` maps each subdivision vertex to the edge it replaced;
    ``segments`` maps that edge id to its two replacement edge ids in
    traversal order (u-side first).
    """

    graph: Graph
    new_vertices: tuple[str, ...]
    source_edge: Mapping[str, str]
    segments: Mapping[str, tuple[str, str]]


def subdivide_edges(graph: Graph, edge_ids: Iterable[str]) -> SubdivisionResult:
    """Replace each listed edge by a two-edge path through a new vertex.

    Directed edges u->v become u->w->v.  For signed edges the outer
    half-edges keep their signs and the new vertex gets opposite signs on
    its two half-edges (+ toward u, - toward v), so sign-switching walks
    across the new vertex correspond exactly to walks over the old edge.
    """
    targets = set(edge_ids)
    for eid in targets:
        if eid not in graph.edge_index:
            raise GraphFormatError(f"cannot subdivide unknown edge {eid!r}")
    taken_v = set(graph.vertex_index)
    taken_e = set(graph.edge_index) - targets
    vertices = list(graph.vertices)
    new_vertices: list[str] = []
    source_edge: dict[str, str] = {}
    segments: dict[str, tuple[str, str]] = {}
    edges: list[Edge] = []
    signs: list[tuple[str, str]] = []
    signed = graph.kind == "bidirected"
    for j, e in enumerate(graph.edges):
        if e.id not in targets:
            edges.append(e)
            if signed:
                signs.append(graph.signs[j])
            continue
        w = _fresh("sub:" + e.id, taken_v)
        vertices.append(w)
        new_vertices.append(w)
        source_edge[w] = e.id
        first = _fresh(e.id + ":1", taken_e)
        second = _fresh(e.id + ":2", taken_e)
        segments[e.id] = (first, second)
        edges.append(Edge(first, e.u, w))
        edges.append(Edge(second, w, e.v))
        if signed:
            su, sv = graph.signs[j]
            signs.append((su, PLUS))
            signs.append((MINUS, sv))
    if signed:
        out: Graph = BidirectedGraph(vertices, edges, signs)
    elif graph.kind == "directed":
        out = DirectedGraph(vertices, edges)
    else:
        out = UndirectedGraph(vertices, edges)
    return SubdivisionResult(out, tuple(new_vertices), source_edge, segments)


# ---------------------------------------------------------------------------
# JSON input/output
#
# {"kind": "bidirected", "vertices": ["a", "b"],
#  "edges": [{"id": "e1", "ends": ["a", "b"], "signs": ["+", "-"]}]}
#
# Directed edges list ends as [tail, head].  The file's array order is the
# canonical vertex/edge order; signs appear exactly for bidirected graphs.


def parse_graph(data: Union[str, bytes, dict]) -> Graph:
    """Parse the JSON graph format; raises GraphFormatError on any defect."""
    if isinstance(data, (str, bytes)):
        try:
            obj = json.loads(data)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid JSON: {exc}") from exc
    else:
        obj = data
    if not isinstance(obj, dict):
        raise GraphFormatError("graph JSON must be an object")
    kind = obj.get("kind")
    if kind not in ("undirected", "directed", "bidirected"):
        raise GraphFormatError(f"unknown graph kind: {kind!r}")
    vertices = obj.get("vertices")
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise GraphFormatError("vertices must be a list of strings")
    raw_edges = obj.get("edges")
    if not isinstance(raw_edges, list):
        raise GraphFormatError("edges must be a list")
    edges: list[Edge] = []
    signs: list[tuple[str, str]] = []
    for item in raw_edges:
        if not isinstance(item, dict) or "id" not in item or "ends" not in item:
            raise GraphFormatError(f"edge entries need id and ends: {item!r}")
        ends = item["ends"]
        if not (isinstance(ends, list) and len(ends) == 2):
            raise GraphFormatError(f"edge {item.get('id')!r} needs exactly two ends")
        if kind == "bidirected":
            s = item.get("signs")
            if not (isinstance(s, list) and len(s) == 2 and set(s) <= set(_SIGNS)):
                raise GraphFormatError(
                    f"edge {item['id']!r} needs signs [+-, +-] in a bidirected graph"
                )
            signs.append((s[0], s[1]))
        elif "signs" in item:
            raise GraphFormatError(f"edge {item['id']!r}: signs only apply to bidirected graphs")
        edges.append(Edge(item["id"], ends[0], ends[1]))
    if kind == "undirected":
        return UndirectedGraph(vertices, edges)
    if kind == "directed":
        return DirectedGraph(vertices, edges)
    return BidirectedGraph(vertices, edges, signs)


def graph_to_obj(graph: Graph) -> dict:
    out_edges = []
    for j, e in enumerate(graph.edges):
        entry: dict = {"id": e.id, "ends": [e.u, e.v]}
        if graph.kind == "bidirected":
            entry["signs"] = list(graph.signs[j])
        out_edges.append(entry)
    return {"kind": graph.kind, "vertices": list(graph.vertices), "edges": out_edges}


def serialize_graph(graph: Graph) -> str:
    """Stable JSON text: fixed key order, two-space indent, newline at end."""
    return json.dumps(graph_to_obj(graph), indent=2, sort_keys=True) + "\n"
