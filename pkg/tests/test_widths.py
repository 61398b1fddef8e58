"""Decompositions, porosity, width search, components, and the pursuit game."""

import json

import pytest

from cycleduality import (
    BudgetExceededError,
    CopStrategy,
    CycleDualityError,
    GraphFormatError,
    cycle_porosity,
    cycle_width_bruteforce,
    decomposition_width,
    directed_to_bidirected,
    edge_cut,
    enumerate_cubic_trees,
    hitting_sets_Ye,
    induced_cut,
    is_circular,
    parse_decomposition,
    play_cops_and_robbers,
    serialize_decomposition,
    strong_components,
)
from cycleduality.generators import random_digraph

from helpers import (
    digon_chain,
    digraph_from_arcs,
    directed_cycle,
    directed_path,
    undirected_graph,
)


def four_cycle():
    return digraph_from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


class TestCubicTrees:
    def test_double_factorial_counts(self):
        expected = {1: 1, 2: 1, 3: 1, 4: 3, 5: 15, 6: 105}
        for leaves, count in expected.items():
            names = [f"v{i}" for i in range(leaves)]
            trees = enumerate_cubic_trees(names)
            assert len(trees) == count

    def test_trees_validate_and_differ(self):
        g = directed_cycle(4)
        trees = enumerate_cubic_trees(g.vertices)
        seen = set()
        for dec in trees:
            dec.validate(g)
            key = frozenset(
                frozenset(dec.side_vertices(dec.sides(te)[0]))
                for te in dec.tree_edges()
            )
            seen.add(key)
        assert len(seen) == len(trees)

    def test_leaf_cut_isolates_one_vertex(self):
        g = directed_cycle(3)
        dec = enumerate_cubic_trees(g.vertices)[0]
        leaf_cuts = [
            induced_cut(g, dec, te)
            for te in dec.tree_edges()
            if len(dec.sides(te)[0]) == 1 or len(dec.sides(te)[1]) == 1
        ]
        assert leaf_cuts
        for cut in leaf_cuts:
            assert min(len(cut.side_a), len(cut.side_b)) == 1
            assert len(cut.edges) == 2  # one in, one out at the isolated vertex


class TestPorosity:
    def test_acyclic_cut_is_zero(self):
        g = directed_path(4)
        res = cycle_porosity(g, edge_cut(g, ["v0", "v1"]))
        assert res.value == 0
        assert res.cross_checked

    def test_adjacent_pair_cut_on_the_square(self):
        g = four_cycle()
        res = cycle_porosity(g, edge_cut(g, ["v0", "v1"]))
        assert res.value == 2
        assert res.oracle_value == 2
        assert res.lp_value == 2
        assert res.cross_checked

    def test_antipodal_cut_on_the_square(self):
        g = four_cycle()
        res = cycle_porosity(g, edge_cut(g, ["v0", "v2"]))
        assert res.value == 4  # the one cycle uses all four cut edges

    def test_empty_cut(self):
        g = digon_chain(2)
        res = cycle_porosity(g, edge_cut(g, ["v0", "v1"]))
        assert res.value == 0
        assert res.cross_checked

    def test_lp_only_route(self):
        g = four_cycle()
        res = cycle_porosity(g, edge_cut(g, ["v0", "v1"]), method="lp")
        assert res.lp_value == 2
        assert res.oracle_value is None
        assert not res.cross_checked

    def test_oracle_only_route(self):
        g = four_cycle()
        res = cycle_porosity(g, edge_cut(g, ["v0", "v1"]), method="oracle")
        assert res.oracle_value == 2
        assert res.lp_value is None

    def test_undirected_rejected(self):
        g = undirected_graph(3, [(0, 1), (1, 2), (2, 0)])
        with pytest.raises(GraphFormatError):
            cycle_porosity(g, edge_cut(g, ["v0"]))

    def test_signed_image_agrees_with_base(self):
        g = four_cycle()
        img = directed_to_bidirected(g)
        for side in (["v0"], ["v0", "v1"], ["v0", "v2"]):
            a = cycle_porosity(g, edge_cut(g, side)).value
            b = cycle_porosity(img, edge_cut(img, side)).value
            assert a == b


class TestWidth:
    def test_acyclic_width_zero(self):
        width, dec = cycle_width_bruteforce(directed_path(4))
        assert width == 0
        dec.validate(directed_path(4))

    def test_triangle_width_two(self):
        width, _ = cycle_width_bruteforce(directed_cycle(3))
        assert width == 2

    def test_disjoint_digons_width_two(self):
        width, dec = cycle_width_bruteforce(digon_chain(2))
        assert width == 2
        assert decomposition_width(digon_chain(2), dec) == 2

    def test_empty_graph(self):
        g = random_digraph(0, 0, seed=0)
        width, dec = cycle_width_bruteforce(g)
        assert width == 0
        assert dec.n_nodes == 0

    def test_vertex_cap_enforced(self):
        g = random_digraph(6, 8, seed=0)
        with pytest.raises(BudgetExceededError) as exc:
            cycle_width_bruteforce(g, n_cap=5)
        assert exc.value.kind == "decomposition-leaves"

    def test_best_tree_is_no_worse_than_any_other(self):
        g = random_digraph(4, 7, seed=12)
        width, _ = cycle_width_bruteforce(g)
        for dec in enumerate_cubic_trees(g.vertices):
            assert decomposition_width(g, dec, method="oracle") >= width


class TestHittingSets:
    def test_triangle_sets_within_width(self):
        g = directed_cycle(3)
        dec = enumerate_cubic_trees(g.vertices)[0]
        width = decomposition_width(g, dec, method="oracle")
        y_map = hitting_sets_Ye(g, dec)
        assert set(y_map) == set(dec.tree_edges())
        for te, y in y_map.items():
            assert len(y) <= width
            cut = induced_cut(g, dec, te)
            assert all(
                set(c.vertices) & y
                for c in _cycles_via(g, cut.edges)
            )

    def test_acyclic_sets_empty(self):
        g = directed_path(4)
        _, dec = cycle_width_bruteforce(g)
        y_map = hitting_sets_Ye(g, dec)
        assert all(y == frozenset() for y in y_map.values())

    def test_undirected_rejected(self):
        g = undirected_graph(3, [(0, 1), (1, 2), (2, 0)])
        dec = enumerate_cubic_trees(g.vertices)[0]
        with pytest.raises(GraphFormatError):
            hitting_sets_Ye(g, dec)


def _cycles_via(graph, edge_ids):
    from cycleduality import enumerate_cycles

    wanted = set(edge_ids)
    return [c for c in enumerate_cycles(graph) if wanted & set(c.edges)]


class TestStrongComponents:
    def test_path_gives_singletons(self):
        comps = strong_components(directed_path(3))
        assert sorted(comps) == [("v0",), ("v1",), ("v2",)]

    def test_cycle_is_one_component(self):
        comps = strong_components(directed_cycle(4))
        assert comps == [("v0", "v1", "v2", "v3")]

    def test_removal_splits(self):
        comps = strong_components(directed_cycle(4), removed=["v1"])
        assert all(len(c) == 1 for c in comps)
        assert len(comps) == 3

    def test_unknown_removal_rejected(self):
        with pytest.raises(GraphFormatError):
            strong_components(directed_cycle(3), removed=["zz"])

    def test_signed_standin_coarsens_to_connectivity(self):
        # one-edge paths have no interior, so adjacency alone joins a
        # signed component: the stand-in yields connected components
        for seed in range(6):
            g = random_digraph(5, 8, seed=seed)
            img = directed_to_bidirected(g)
            signed = {frozenset(c) for c in strong_components(img)}
            undirected_adj = {v: set() for v in g.vertices}
            for e in g.edges:
                undirected_adj[e.u].add(e.v)
                undirected_adj[e.v].add(e.u)
            seen, comps = set(), set()
            for v in g.vertices:
                if v in seen:
                    continue
                stack, comp = [v], set()
                while stack:
                    x = stack.pop()
                    if x in comp:
                        continue
                    comp.add(x)
                    stack.extend(undirected_adj[x] - comp)
                seen |= comp
                comps.add(frozenset(comp))
            assert signed == comps
            # and it only ever merges directed components, never splits them
            for dcomp in strong_components(g):
                assert any(set(dcomp) <= sc for sc in signed)

    def test_undirected_rejected(self):
        g = undirected_graph(3, [(0, 1), (1, 2)])
        with pytest.raises(GraphFormatError):
            strong_components(g)


class TestGame:
    def strategy_for(self, graph):
        width, dec = cycle_width_bruteforce(graph)
        return width, CopStrategy.from_decomposition(graph, dec)

    def test_triangle_pursuit(self):
        g = directed_cycle(3)
        width, strat = self.strategy_for(g)
        result = play_cops_and_robbers(g, strat)
        assert result.caught
        assert result.max_cops <= 3 * max(width, 1)
        assert result.transcript[0].phase == "initial"
        assert result.transcript[-1].robber is None

    def test_acyclic_single_cop_sweep(self):
        g = directed_path(4)
        width, strat = self.strategy_for(g)
        assert width == 0
        result = play_cops_and_robbers(g, strat)
        assert result.caught
        assert result.max_cops <= 1

    def test_seeded_digraphs_within_budget(self):
        for seed in (0, 4, 9, 17):
            g = random_digraph(4, 7, seed=seed)
            width, strat = self.strategy_for(g)
            result = play_cops_and_robbers(g, strat)
            assert result.caught
            assert result.max_cops <= 3 * max(width, 1)
            assert result.lines >= 1

    def test_scripted_run_follows_the_principal_line(self):
        g = digon_chain(2)
        _, strat = self.strategy_for(g)
        free = play_cops_and_robbers(g, strat)
        script = [st.robber for st in free.transcript if st.robber is not None]
        replay = play_cops_and_robbers(g, strat, robber=script)
        assert replay.caught
        assert replay.rounds == free.rounds
        assert replay.lines == 1

    def test_illegal_script_rejected(self):
        g = directed_cycle(3)
        _, strat = self.strategy_for(g)
        with pytest.raises(CycleDualityError):
            play_cops_and_robbers(g, strat, robber=[("v0", "zz")])

    def test_empty_graph_rejected(self):
        g = random_digraph(0, 0, seed=0)
        width, dec = cycle_width_bruteforce(g)
        strat = CopStrategy(g, dec, {}, width)
        with pytest.raises(GraphFormatError):
            play_cops_and_robbers(g, strat)

    def test_transcript_serialization_shape(self):
        g = directed_cycle(3)
        _, strat = self.strategy_for(g)
        result = play_cops_and_robbers(g, strat)
        rows = json.loads(result.to_json())
        assert len(rows) == len(result.transcript)
        for row in rows:
            assert set(row) == {"round", "cops", "robber-component", "strategy-phase"}


class TestDecompositionSerialization:
    def test_round_trip(self):
        g = directed_cycle(4)
        for dec in enumerate_cubic_trees(g.vertices):
            back = parse_decomposition(serialize_decomposition(dec))
            assert back.parent == dec.parent
            assert dict(back.leaf_map) == dict(dec.leaf_map)

    def test_parse_rejects_garbage(self):
        with pytest.raises(GraphFormatError):
            parse_decomposition("{\"parent\": \"no\"}")


class TestCircularPredicate:
    def test_directed_cycle(self):
        assert is_circular(directed_cycle(3))

    def test_path_is_not(self):
        assert not is_circular(directed_path(3))

    def test_disconnected_cycles_are_not(self):
        assert not is_circular(digon_chain(2))

    def test_single_vertex(self):
        assert is_circular(random_digraph(1, 0, seed=0))
