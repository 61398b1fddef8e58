"""Seeded random graph generators for the three graph kinds.

Every generator is a pure function of (n, m, seed): vertex ids are
v0..v{n-1}, edge ids e0..e{m-1}, and the same arguments always produce
the same graph.  Parallel edges are allowed, loops are not.
"""

from __future__ import annotations

import random

from .errors import GraphFormatError
from .graphs import BidirectedGraph, DirectedGraph, Edge, UndirectedGraph


def _check(n: int, m: int) -> None:
    if n < 0 or m < 0:
        raise GraphFormatError("vertex and edge counts must be nonnegative")
    if m > 0 and n < 2:
        raise GraphFormatError("edges need at least two vertices")


def _vertices(n: int) -> tuple[str, ...]:
    return tuple(f"v{i}" for i in range(n))


def random_digraph(n: int, m: int, seed: int) -> DirectedGraph:
    _check(n, m)
    rng = random.Random(seed)
    vs = _vertices(n)
    pairs = [(a, b) for a in vs for b in vs if a != b]
    edges = []
    for i in range(m):
        a, b = rng.choice(pairs)
        edges.append(Edge(f"e{i}", a, b))
    return DirectedGraph(vs, edges)


def random_undirected(n: int, m: int, seed: int) -> UndirectedGraph:
    _check(n, m)
    rng = random.Random(seed)
    vs = _vertices(n)
    pairs = [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)]
    edges = []
    for i in range(m):
        a, b = rng.choice(pairs)
        edges.append(Edge(f"e{i}", a, b))
    return UndirectedGraph(vs, edges)


def random_bidirected(n: int, m: int, seed: int) -> BidirectedGraph:
    _check(n, m)
    rng = random.Random(seed)
    vs = _vertices(n)
    pairs = [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)]
    edges = []
    signs = []
    for i in range(m):
        a, b = rng.choice(pairs)
        edges.append(Edge(f"e{i}", a, b))
        signs.append((rng.choice("+-"), rng.choice("+-")))
    return BidirectedGraph(vs, edges, signs)
