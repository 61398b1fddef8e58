"""Graph carriers, incidence matrices, and the two structural transforms."""

import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cycleduality import (
    BidirectedGraph,
    DirectedGraph,
    GraphFormatError,
    RationalMatrix,
    UndirectedGraph,
    directed_to_bidirected,
    edge_cut,
    enumerate_cycles,
    graph_to_obj,
    incidence_matrix,
    is_totally_unimodular,
    parse_graph,
    serialize_graph,
    subdivide_edges,
    vertex_split,
)
from cycleduality.generators import random_bidirected, random_digraph, random_undirected

from helpers import (
    bidirected_graph,
    digraph_from_arcs,
    directed_cycle,
    directed_path,
    undirected_graph,
)


class TestConstruction:
    def test_loops_rejected_everywhere(self):
        for cls in (UndirectedGraph, DirectedGraph):
            with pytest.raises(GraphFormatError):
                cls(["a"], [("e0", "a", "a")])
        with pytest.raises(GraphFormatError):
            BidirectedGraph(["a"], [("e0", "a", "a")], [("+", "-")])

    def test_duplicate_ids_rejected(self):
        with pytest.raises(GraphFormatError):
            DirectedGraph(["a", "a"], [])
        with pytest.raises(GraphFormatError):
            DirectedGraph(["a", "b"], [("e0", "a", "b"), ("e0", "b", "a")])

    def test_parallel_edges_allowed(self):
        g = DirectedGraph(["a", "b"], [("e0", "a", "b"), ("e1", "a", "b")])
        assert g.m == 2

    def test_order_is_construction_order(self):
        g = DirectedGraph(["b", "a"], [("x", "b", "a"), ("w", "a", "b")])
        assert g.vertices == ("b", "a")
        assert [e.id for e in g.edges] == ["x", "w"]


class TestIncidence:
    def test_single_edge_column(self):
        g = DirectedGraph(["u", "v"], [("e0", "u", "v")])
        assert incidence_matrix(g) == [[-1], [1]]

    def test_cycle_rows_sum_to_zero(self):
        m = incidence_matrix(directed_cycle(3))
        assert all(sum(row) == 0 for row in m)

    def test_random_digraph_totally_unimodular(self):
        g = random_digraph(5, 8, seed=11)
        mat = RationalMatrix(incidence_matrix(g))
        assert is_totally_unimodular(mat)

    def test_directed_image_matches_directed_matrix(self):
        for seed in range(5):
            g = random_digraph(4, 6, seed=seed)
            assert incidence_matrix(directed_to_bidirected(g)) == incidence_matrix(g)

    def test_alternating_parallel_pair_block(self):
        g = bidirected_graph(2, [(0, 1), (0, 1)], [("+", "-"), ("-", "+")])
        assert incidence_matrix(g) == [[1, -1], [-1, 1]]

    def test_cycle_union_row_sums_vanish(self):
        # in-degree equals out-degree on any union of edge-disjoint cycles
        g = digraph_from_arcs(4, [(0, 1), (1, 0), (1, 2), (2, 3), (3, 1)])
        m = incidence_matrix(g)
        cycles = enumerate_cycles(g)
        for r in range(1, len(cycles) + 1):
            for fam in itertools.combinations(cycles, r):
                eids = [e for c in fam for e in c.edges]
                if len(set(eids)) != len(eids):
                    continue
                cols = [g.edge_index[e] for e in eids]
                assert all(sum(row[j] for j in cols) == 0 for row in m)


class TestDirectedToBidirected:
    def test_digon_image_has_two_cycle(self):
        g = digraph_from_arcs(2, [(0, 1), (1, 0)])
        img = directed_to_bidirected(g)
        cycles = enumerate_cycles(img)
        assert len(cycles) == 1 and len(cycles[0].edges) == 2

    def test_three_cycle_image_single_cycle(self):
        assert len(enumerate_cycles(directed_to_bidirected(directed_cycle(3)))) == 1

    def test_dag_image_acyclic(self):
        g = directed_path(5)
        assert enumerate_cycles(directed_to_bidirected(g)) == []

    def test_cycle_sets_in_bijection(self):
        for seed in range(8):
            g = random_digraph(4, 7, seed=seed)
            ours = {frozenset(c.edges) for c in enumerate_cycles(g)}
            imgs = {
                frozenset(c.edges)
                for c in enumerate_cycles(directed_to_bidirected(g))
            }
            assert ours == imgs


class TestVertexSplit:
    def test_counting(self):
        g = random_bidirected(4, 6, seed=3)
        split = vertex_split(g)
        assert split.graph.n == 2 * g.n
        assert split.graph.m == g.m + g.n

    def test_two_cycle_becomes_four_cycle(self):
        g = bidirected_graph(2, [(0, 1), (0, 1)], [("+", "-"), ("-", "+")])
        split = vertex_split(g)
        cycles = enumerate_cycles(split.graph)
        assert len(cycles) == 1
        assert len(cycles[0].edges) == 4
        assert set(split.split_edge.values()) <= set(cycles[0].edges)

    def test_cycle_counts_match_through_split(self):
        for seed in range(10):
            g = random_bidirected(4, 6, seed=seed)
            split = vertex_split(g)
            assert len(enumerate_cycles(g)) == len(enumerate_cycles(split.graph))

    def test_edge_disjoint_split_cycles_are_vertex_disjoint(self):
        for seed in range(10):
            g = random_bidirected(4, 6, seed=seed)
            cycles = enumerate_cycles(vertex_split(g).graph)
            for c1, c2 in itertools.combinations(cycles, 2):
                if not set(c1.edges) & set(c2.edges):
                    assert not set(c1.vertices) & set(c2.vertices)


class TestSubdivision:
    def test_empty_subdivision_is_identity(self):
        g = directed_cycle(3)
        sub = subdivide_edges(g, [])
        assert sub.new_vertices == ()
        assert graph_to_obj(sub.graph) == graph_to_obj(g)

    def test_three_cycle_one_edge(self):
        g = directed_cycle(3)
        sub = subdivide_edges(g, ["e0"])
        cycles = enumerate_cycles(sub.graph)
        assert len(cycles) == 1 and len(cycles[0].edges) == 4
        assert set(sub.new_vertices) <= set(cycles[0].vertices)

    def test_signed_two_cycle_both_edges(self):
        g = bidirected_graph(2, [(0, 1), (0, 1)], [("+", "-"), ("-", "+")])
        sub = subdivide_edges(g, ["e0", "e1"])
        cycles = enumerate_cycles(sub.graph)
        assert len(cycles) == 1 and len(cycles[0].edges) == 4

    def test_cycle_incidence_preserved(self):
        for seed in range(6):
            g = random_digraph(4, 7, seed=seed)
            targets = [e.id for e in g.edges[:3]]
            sub = subdivide_edges(g, targets)
            before = enumerate_cycles(g)
            after = enumerate_cycles(sub.graph)
            assert len(before) == len(after)
            hits_before = sorted(
                sum(1 for e in c.edges if e in targets) for c in before
            )
            hits_after = sorted(
                sum(1 for v in c.vertices if v in sub.new_vertices) for c in after
            )
            assert hits_before == hits_after


class TestEdgeCut:
    def test_partition_and_crossing_edges(self):
        g = digraph_from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        cut = edge_cut(g, ["v0", "v1"])
        assert cut.side_a == frozenset({"v0", "v1"})
        assert cut.side_b == frozenset({"v2", "v3"})
        assert set(cut.edges) == {"e1", "e3"}

    def test_unknown_vertex_rejected(self):
        g = directed_cycle(3)
        with pytest.raises(GraphFormatError):
            edge_cut(g, ["nope"])


class TestSerialization:
    def test_directed_round_trip(self):
        g = random_digraph(5, 8, seed=1)
        assert graph_to_obj(parse_graph(serialize_graph(g))) == graph_to_obj(g)

    def test_signs_round_trip(self):
        g = random_bidirected(4, 6, seed=2)
        back = parse_graph(serialize_graph(g))
        assert graph_to_obj(back) == graph_to_obj(g)

    def test_parse_rejects_bad_kind(self):
        with pytest.raises(GraphFormatError):
            parse_graph(json.dumps({"kind": "mixed", "vertices": [], "edges": []}))

    def test_parse_rejects_duplicate_edge_ids(self):
        obj = {
            "kind": "directed",
            "vertices": ["a", "b"],
            "edges": [
                {"id": "e", "ends": ["a", "b"]},
                {"id": "e", "ends": ["b", "a"]},
            ],
        }
        with pytest.raises(GraphFormatError):
            parse_graph(json.dumps(obj))

    @settings(max_examples=40, deadline=None)
    @given(
        kind=st.sampled_from(["directed", "undirected", "bidirected"]),
        n=st.integers(min_value=2, max_value=6),
        m=st.integers(min_value=0, max_value=9),
        seed=st.integers(min_value=0, max_value=10**6),
    )
    def test_generated_graphs_round_trip(self, kind, n, m, seed):
        gen = {
            "directed": random_digraph,
            "undirected": random_undirected,
            "bidirected": random_bidirected,
        }[kind]
        g = gen(n, m, seed)
        assert graph_to_obj(parse_graph(serialize_graph(g))) == graph_to_obj(g)


class TestGenerators:
    def test_determinism(self):
        a = random_digraph(5, 7, seed=42)
        b = random_digraph(5, 7, seed=42)
        assert graph_to_obj(a) == graph_to_obj(b)

    def test_rejects_bad_parameters(self):
        with pytest.raises(GraphFormatError):
            random_digraph(-1, 0, seed=0)
        with pytest.raises(GraphFormatError):
            random_undirected(1, 2, seed=0)

    def test_empty_graph_allowed(self):
        g = random_bidirected(0, 0, seed=0)
        assert g.n == 0 and g.m == 0
