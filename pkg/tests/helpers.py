"""Shared instance pools and builders for the test suite.

The canonical digraph family drives the soundness sweeps: every simple
digraph on up to 4 vertices exactly once up to isomorphism, topped up
with seeded non-isomorphic 5-vertex instances.  All randomness is seeded
with string literals so the pools are identical on every run.
"""

from __future__ import annotations

import functools
import itertools
import random
from typing import Iterator, Sequence

from cycleduality import BidirectedGraph, DirectedGraph, UndirectedGraph

# C1/C2 family shape: exhaustive n <= 4 plus seeded n = 5 instances
SMALL_N_MAX = 4
FIVE_VERTEX_COUNT = 280
FIVE_VERTEX_ARC_CAP = 10
TARGETS_PER_GRAPH = 20


def digraph_from_arcs(n: int, arcs: Sequence[tuple[int, int]]) -> DirectedGraph:
    names = [f"v{i}" for i in range(n)]
    edges = [(f"e{k}", names[a], names[b]) for k, (a, b) in enumerate(arcs)]
    return DirectedGraph(names, edges)


def _ordered_pairs(n: int) -> list[tuple[int, int]]:
    return [(a, b) for a in range(n) for b in range(n) if a != b]


def _canonical_mask(n: int, mask: int, pairs, pos) -> int:
    best = None
    for perm in itertools.permutations(range(n)):
        img = 0
        for i, (a, b) in enumerate(pairs):
            if mask >> i & 1:
                img |= 1 << pos[(perm[a], perm[b])]
        if best is None or img < best:
            best = img
    return best


def _mask_to_digraph(n: int, mask: int, pairs) -> DirectedGraph:
    return digraph_from_arcs(
        n, [p for i, p in enumerate(pairs) if mask >> i & 1]
    )


@functools.lru_cache(maxsize=None)
def canonical_digraphs() -> tuple[DirectedGraph, ...]:
    """Non-isomorphic simple digraphs: all with n <= 4, seeded with n = 5.

    Deduplication is by the minimum arc bitmask over all vertex
    relabelings.  The n = 5 instances are sampled with a fixed seed and
    at most FIVE_VERTEX_ARC_CAP arcs, deduplicated the same way.
    """
    out: list[DirectedGraph] = []
    for n in range(1, SMALL_N_MAX + 1):
        pairs = _ordered_pairs(n)
        pos = {p: i for i, p in enumerate(pairs)}
        seen: set[int] = set()
        for mask in range(1 << len(pairs)):
            canon = _canonical_mask(n, mask, pairs, pos)
            if canon in seen:
                continue
            seen.add(canon)
            out.append(_mask_to_digraph(n, canon, pairs))
    rng = random.Random("canonical-digraphs-n5")
    pairs5 = _ordered_pairs(5)
    pos5 = {p: i for i, p in enumerate(pairs5)}
    seen5: set[int] = set()
    while len(seen5) < FIVE_VERTEX_COUNT:
        m = rng.randint(1, FIVE_VERTEX_ARC_CAP)
        mask = 0
        for a, b in rng.sample(pairs5, m):
            mask |= 1 << pos5[(a, b)]
        canon = _canonical_mask(5, mask, pairs5, pos5)
        if canon in seen5:
            continue
        seen5.add(canon)
        out.append(_mask_to_digraph(5, canon, pairs5))
    return tuple(out)


def seeded_subsets(ids: Sequence[str], tag: str, count: int = TARGETS_PER_GRAPH):
    """Deterministic target subsets: empty, full, and seeded random picks."""
    rng = random.Random(f"subsets:{tag}")
    subsets = [tuple(), tuple(ids)]
    while len(subsets) < count:
        p = rng.uniform(0.2, 0.8)
        subsets.append(tuple(x for x in ids if rng.random() < p))
    return subsets[:count]


# ---------------------------------------------------------------------------
# small fixed graphs used across test files


def directed_cycle(n: int) -> DirectedGraph:
    return digraph_from_arcs(n, [(i, (i + 1) % n) for i in range(n)])


def directed_path(n: int) -> DirectedGraph:
    return digraph_from_arcs(n, [(i, i + 1) for i in range(n - 1)])


def digon_chain(k: int) -> DirectedGraph:
    """k vertex-disjoint digons: v0<->v1, v2<->v3, ..."""
    arcs = []
    for t in range(k):
        a, b = 2 * t, 2 * t + 1
        arcs.append((a, b))
        arcs.append((b, a))
    return digraph_from_arcs(2 * k, arcs)


def undirected_graph(n: int, pairs: Sequence[tuple[int, int]]) -> UndirectedGraph:
    names = [f"v{i}" for i in range(n)]
    edges = [(f"e{k}", names[a], names[b]) for k, (a, b) in enumerate(pairs)]
    return UndirectedGraph(names, edges)


def bidirected_graph(
    n: int,
    pairs: Sequence[tuple[int, int]],
    signs: Sequence[tuple[str, str]],
) -> BidirectedGraph:
    names = [f"v{i}" for i in range(n)]
    edges = [(f"e{k}", names[a], names[b]) for k, (a, b) in enumerate(pairs)]
    return BidirectedGraph(names, edges, list(signs))


# a signed graph where the LP route yields a fractional basic dual,
# so the vertex engine must raise IntegralityError
FRACTIONAL_SIGNED = dict(
    n=3,
    pairs=[(1, 2), (1, 2), (0, 2), (0, 2), (0, 2)],
    signs=[("-", "-"), ("+", "+"), ("-", "+"), ("+", "+"), ("+", "+")],
    targets=["v0", "v1"],
)


def fractional_signed_graph() -> tuple[BidirectedGraph, list[str]]:
    d = FRACTIONAL_SIGNED
    return bidirected_graph(d["n"], d["pairs"], d["signs"]), d["targets"]


# the two-edge signed graph whose stacked LP matrix is not 1-regular
NONREGULAR_SIGNED = dict(
    n=2, pairs=[(0, 1), (0, 1)], signs=[("+", "+"), ("+", "-")]
)


def nonregular_signed_graph() -> BidirectedGraph:
    d = NONREGULAR_SIGNED
    return bidirected_graph(d["n"], d["pairs"], d["signs"])


def signed_multigraphs(n: int, m: int) -> Iterator[BidirectedGraph]:
    """Every n-vertex loop-free multigraph with exactly m edges, every signing."""
    names = [f"v{i}" for i in range(n)]
    vpairs = list(itertools.combinations(range(n), 2))
    sign_choices = [("+", "+"), ("+", "-"), ("-", "+"), ("-", "-")]
    for combo in itertools.combinations_with_replacement(vpairs, m):
        edges = [(f"e{k}", names[a], names[b]) for k, (a, b) in enumerate(combo)]
        for signing in itertools.product(sign_choices, repeat=m):
            yield BidirectedGraph(names, edges, list(signing))
