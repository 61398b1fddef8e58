"""Acceptance gate: one test per shipped guarantee, brute force as referee.

Each test prints one PASS line with its coverage numbers (visible with
pytest -s or -rP); the pytest pass/fail status is the gate itself.
"""

import itertools
import json
import random
import time

import pytest

from cycleduality import (
    CopStrategy,
    bidirected_vertex_duality,
    cycle_porosity,
    cycle_width_bruteforce,
    directed_edge_duality,
    directed_to_bidirected,
    directed_vertex_duality,
    edge_cut,
    incidence_matrix,
    is_disjoint_cycle_union,
    is_k_regular,
    is_totally_unimodular,
    max_packing,
    min_hitting,
    play_cops_and_robbers,
    search_nullspace_noncycle_fixture,
    search_vertex_question_counterexample,
    undirected_edge_duality,
    verify_hitting,
    vertex_split,
)
from cycleduality import cli, engines
from cycleduality.engines import build_split_vertex_lp
from cycleduality.generators import random_bidirected, random_digraph, random_undirected

from helpers import (
    canonical_digraphs,
    nonregular_signed_graph,
    seeded_subsets,
    signed_multigraphs,
)

SUBSETS_PER_GRAPH = 20


@pytest.fixture(scope="module")
def duality_sweep():
    """Run the edge and vertex engines over the whole canonical family once.

    Every LP solve is funneled through a recording shim so the integrality
    criterion can audit the same solves the soundness criteria used.
    """
    graphs = canonical_digraphs()
    lp_log = {"solves": 0, "nonintegral": 0}
    original = engines._solve_with_integral_certificates

    def shim(lp, context):
        sol, xs, y = original(lp, context)
        lp_log["solves"] += 1
        primal_ok = all(v.denominator == 1 and v.numerator in (0, 1) for v in sol.primal)
        dual_ok = all(v.denominator == 1 for v in y)
        if not (primal_ok and dual_ok):
            lp_log["nonintegral"] += 1
        return sol, xs, y

    stats = {
        "family": len(graphs),
        "lp_log": lp_log,
        "c1": {"pairs": 0, "violations": [], "elapsed": 0.0},
        "c2": {"pairs": 0, "violations": [], "elapsed": 0.0},
    }

    engines._solve_with_integral_certificates = shim
    try:
        t0 = time.monotonic()
        for idx, g in enumerate(graphs):
            edge_ids = [e.id for e in g.edges]
            for F in seeded_subsets(edge_ids, f"c1:{idx}", count=SUBSETS_PER_GRAPH):
                stats["c1"]["pairs"] += 1
                try:
                    rep = directed_edge_duality(g, F)
                    best = max_packing(g, F, "edges", "edge")
                    floor = min_hitting(g, F, "edge")
                    ok = (
                        rep.packing.score == best.score
                        and rep.hitting.hits_all is True
                        and len(floor.elements) <= len(rep.hitting.elements)
                        and rep.packing.score >= len(rep.hitting.elements)
                        and rep.inequality_verified
                        and _pairwise_disjoint(rep.packing.cycles, "edges")
                    )
                    if not ok:
                        stats["c1"]["violations"].append((idx, F))
                except Exception as exc:  # a raise is a violation, not an abort
                    stats["c1"]["violations"].append((idx, F, repr(exc)))
        stats["c1"]["elapsed"] = time.monotonic() - t0

        t0 = time.monotonic()
        for idx, g in enumerate(graphs):
            image = directed_to_bidirected(g)
            for S in seeded_subsets(g.vertices, f"c2:{idx}", count=SUBSETS_PER_GRAPH):
                stats["c2"]["pairs"] += 1
                try:
                    best = max_packing(g, S, "vertices", "vertex")
                    floor = min_hitting(g, S, "vertex")
                    ok = True
                    for rep, carrier in (
                        (directed_vertex_duality(g, S), g),
                        (bidirected_vertex_duality(image, S), image),
                    ):
                        ok = ok and (
                            rep.packing.score == best.score
                            and rep.hitting.hits_all is True
                            and len(floor.elements) <= len(rep.hitting.elements)
                            and rep.packing.score >= len(rep.hitting.elements)
                            and rep.inequality_verified
                            and _pairwise_disjoint(rep.packing.cycles, "vertices")
                            and verify_hitting(carrier, rep.hitting.elements, S, "vertex")
                        )
                    if not ok:
                        stats["c2"]["violations"].append((idx, S))
                except Exception as exc:
                    stats["c2"]["violations"].append((idx, S, repr(exc)))
        stats["c2"]["elapsed"] = time.monotonic() - t0
    finally:
        engines._solve_with_integral_certificates = original
    return stats


def _pairwise_disjoint(cycles, attr):
    for c1, c2 in itertools.combinations(cycles, 2):
        if set(getattr(c1, attr)) & set(getattr(c2, attr)):
            return False
    return True


def test_c01_directed_edge_duality_matches_brute_force(duality_sweep):
    s = duality_sweep
    assert s["family"] >= 500
    assert s["c1"]["pairs"] == s["family"] * SUBSETS_PER_GRAPH
    assert s["c1"]["violations"] == []
    assert s["c1"]["elapsed"] < 600
    print(
        f"C1 PASS: {s['family']} canonical digraphs x {SUBSETS_PER_GRAPH} edge subsets, "
        f"{s['c1']['pairs']} pairs, 0 violations, {s['c1']['elapsed']:.0f}s"
    )


def test_c02_vertex_engines_match_brute_force(duality_sweep):
    s = duality_sweep
    assert s["c2"]["pairs"] == s["family"] * SUBSETS_PER_GRAPH
    assert s["c2"]["violations"] == []
    assert s["c2"]["elapsed"] < 900
    print(
        f"C2 PASS: {s['c2']['pairs']} vertex-target pairs through both vertex engines, "
        f"0 violations, {s['c2']['elapsed']:.0f}s"
    )


def test_c03_undirected_rank_engine_sandwich():
    pairs = 0
    violations = []
    for i in range(1000):
        rng = random.Random(f"c3:{i}")
        n = rng.randint(2, 5)
        m = rng.randint(0, 8)
        g = random_undirected(n, m, seed=i)
        edge_ids = [e.id for e in g.edges]
        if i % 5 == 0 or not edge_ids:
            F = list(edge_ids)
        else:
            p = rng.uniform(0.2, 0.8)
            F = [e for e in edge_ids if rng.random() < p]
        pairs += 1
        try:
            rep = undirected_edge_duality(g, F)
            packed_edges = [eid for c in rep.packing.cycles for eid in c.edges]
            fset = set(F)
            ok = (
                len(packed_edges) == len(set(packed_edges))
                and all(eid in g.edge_index for eid in packed_edges)
                and rep.packing.score == sum(1 for eid in packed_edges if eid in fset)
                and rep.packing.score >= rep.gf2_rank
                and rep.gf2_rank >= len(rep.hitting.elements)
                and verify_hitting(g, rep.hitting.elements, fset, "edge")
            )
            if not ok:
                violations.append(i)
        except Exception as exc:
            violations.append((i, repr(exc)))
    assert pairs == 1000
    assert violations == []
    print(f"C3 PASS: 1000 seeded undirected multigraphs (n<=5, m<=8), 0 violations")


def test_c04_every_lp_solve_is_integral(duality_sweep):
    log = duality_sweep["lp_log"]
    expected_floor = duality_sweep["c2"]["pairs"] * 2  # two engines per C2 pair
    assert log["solves"] >= expected_floor
    assert log["nonintegral"] == 0
    print(
        f"C4 PASS: {log['solves']} LP solves audited across C1-C2, "
        f"all primal vectors 0/1 and dual vectors integral"
    )


def test_c05_regularity_oracles():
    for i in range(100):
        rng = random.Random(f"c5a:{i}")
        n = rng.randint(1, 5)
        g = random_digraph(n, rng.randint(0, 10) if n >= 2 else 0, seed=i)
        assert is_totally_unimodular(incidence_matrix(g)), f"digraph {i}"
    for i in range(100):
        rng = random.Random(f"c5b:{i}")
        n = rng.randint(1, 4)
        g = random_bidirected(n, rng.randint(0, 6) if n >= 2 else 0, seed=i)
        assert is_k_regular(incidence_matrix(g), 2), f"bidirected {i}"
    # stacked split-program matrices of directed images; sampled minor cap
    for i in range(50):
        rng = random.Random(f"c5c:{i}")
        g = random_digraph(rng.randint(2, 4), rng.randint(1, 6), seed=i)
        split = vertex_split(directed_to_bidirected(g))
        a = build_split_vertex_lp(split.graph, split.split_edge.values()).matrix
        assert is_k_regular(a, 1, max_checks=200, seed=i), f"stacked {i}"
    # negative control: the check must reject a non-image stacking
    bad = nonregular_signed_graph()
    split = vertex_split(bad)
    a = build_split_vertex_lp(split.graph, split.split_edge.values()).matrix
    assert not is_k_regular(a, 1)
    print(
        "C5 PASS: 100 digraph incidences TU (exhaustive), 100 signed incidences "
        "2-regular (exhaustive), 50 stacked split matrices 1-regular "
        "(sampled 200 minors each), negative control rejected"
    )


def test_c06_nullspace_fixture_and_split_exhaustion():
    report = search_nullspace_noncycle_fixture()
    assert report.found
    assert report.graph.n <= 6
    assert not is_disjoint_cycle_union(report.graph, report.support)

    graphs = 0
    vectors = 0
    null_vectors = 0
    for n in (2, 3, 4):
        for m in range(1, 5):
            for g in signed_multigraphs(n, m):
                graphs += 1
                split = vertex_split(g)
                inc = incidence_matrix(split.graph)
                nn, mm = split.graph.n, split.graph.m
                base = sum(8 << (5 * i) for i in range(nn))
                cols = []
                for j in range(mm):
                    c = 0
                    for i in range(nn):
                        c |= (inc[i][j] + 8) << (5 * i)
                    cols.append(c)
                packed = [0] * (1 << mm)
                for mask in range(1, 1 << mm):
                    low = (mask & -mask).bit_length() - 1
                    packed[mask] = packed[mask & (mask - 1)] + cols[low]
                    vectors += 1
                    if packed[mask] == mask.bit_count() * base:
                        null_vectors += 1
                        support = [
                            split.graph.edges[j].id
                            for j in range(mm)
                            if mask >> j & 1
                        ]
                        assert is_disjoint_cycle_union(split.graph, support), (
                            n,
                            m,
                            support,
                        )
    assert null_vectors > 0  # the sweep saw real kernel vectors, not an empty pass
    print(
        f"C6 PASS: witness found at n={report.graph.n} "
        f"({report.graphs_checked} graphs searched); split-graph sweep over "
        f"{graphs} signed multigraphs (n<=4, m<=4), {vectors} 0/1 vectors, "
        f"{null_vectors} kernel vectors, all decompose into cycles"
    )


def test_c07_porosity_routes_agree():
    pairs = 0
    for i in range(200):
        rng = random.Random(f"c7:{i}")
        n = rng.randint(2, 6)
        m = rng.randint(1, min(10, 2 * n * (n - 1)))
        g = random_digraph(n, m, seed=rng.randint(0, 10**6))
        if i >= 100:
            g = directed_to_bidirected(g)
        side = rng.sample(list(g.vertices), rng.randint(1, n - 1))
        res = cycle_porosity(g, edge_cut(g, side), method="both")
        assert res.cross_checked, f"pair {i}"
        assert res.lp_value == res.oracle_value == res.value, f"pair {i}"
        pairs += 1
    assert pairs == 200
    print("C7 PASS: 200 (graph, cut) pairs (100 digraphs, 100 images), LP = search")


def test_c08_pursuit_stays_within_triple_width():
    instances = 0
    for i in range(100):
        rng = random.Random(f"c8:{i}")
        n = rng.randint(1, 6)
        if n < 2:
            m = 0
        elif i % 3 == 0 and n >= 3:
            m = rng.randint(6, 9)
        else:
            m = rng.randint(0, 9)
        g = random_digraph(n, m, seed=rng.randint(0, 10**6))
        width, dec = cycle_width_bruteforce(g)
        strategy = CopStrategy.from_decomposition(g, dec)
        result = play_cops_and_robbers(g, strategy)
        assert result.caught, f"instance {i}"
        assert result.max_cops <= 3 * max(width, 1), f"instance {i}"
        for state in result.transcript:
            assert len(state.cops) <= 3 * max(width, 1), f"instance {i}"
        instances += 1
    assert instances == 100
    print("C8 PASS: 100 digraphs (n<=6), adversarial pursuit caught within 3*max(k,1) cops")


def test_c09_no_undirected_vertex_counterexample():
    report = search_vertex_question_counterexample(5, trials=None)
    assert report.mode == "exhaustive"
    assert report.found is False
    assert report.instance is None
    assert report.graphs_checked == 1099  # all labeled simple graphs, n <= 5
    print(
        f"C9 PASS: exhaustive sweep, {report.graphs_checked} graphs, "
        f"{report.pairs_checked} (graph, S) pairs, 0 counterexamples"
    )


def test_c10_reruns_are_byte_identical(tmp_path):
    graph_files = {}

    def graph_file(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        graph_files[name] = str(path)
        return str(path)

    tri = graph_file(
        "tri.json",
        {
            "kind": "directed",
            "vertices": ["a", "b", "c"],
            "edges": [
                {"id": "e0", "ends": ["a", "b"]},
                {"id": "e1", "ends": ["b", "c"]},
                {"id": "e2", "ends": ["c", "a"]},
            ],
        },
    )
    und = graph_file(
        "und.json",
        {
            "kind": "undirected",
            "vertices": ["a", "b", "c"],
            "edges": [
                {"id": "e0", "ends": ["a", "b"]},
                {"id": "e1", "ends": ["b", "c"]},
                {"id": "e2", "ends": ["c", "a"]},
            ],
        },
    )
    img = graph_file(
        "img.json",
        {
            "kind": "bidirected",
            "vertices": ["a", "b"],
            "edges": [
                {"id": "e0", "ends": ["a", "b"], "signs": ["-", "+"]},
                {"id": "e1", "ends": ["b", "a"], "signs": ["-", "+"]},
            ],
        },
    )

    commands = [
        ["duality", "--input", tri],
        ["duality", "--input", tri, "--target", "edges=all"],
        ["duality", "--input", und, "--target", "edges=all"],
        ["duality", "--input", und, "--target", "vertices=all"],
        ["duality", "--input", img, "--target", "all"],
        ["widths", "porosity", "--input", tri, "--cut", "a"],
        ["widths", "cyclewidth", "--input", tri],
        ["widths", "strategy", "--input", tri],
        ["widths", "play", "--input", tri],
        ["search", "vertex-question", "--n-max", "3"],
        ["search", "nullspace-fixture", "--n-max", "4", "--trials", "300"],
        ["generate", "--kind", "directed", "--n", "4", "--m", "6", "--seed", "3"],
        ["generate", "--kind", "undirected", "--n", "4", "--m", "5", "--seed", "3"],
        ["generate", "--kind", "bidirected", "--n", "4", "--m", "5", "--seed", "3"],
    ]
    for k, argv in enumerate(commands):
        out1 = tmp_path / f"out{k}a.json"
        out2 = tmp_path / f"out{k}b.json"
        assert cli.main([*argv, "--out", str(out1)]) == 0, argv
        assert cli.main([*argv, "--out", str(out2)]) == 0, argv
        assert out1.read_bytes() == out2.read_bytes(), argv
        assert out1.read_bytes().endswith(b"\n")
    print(f"C10 PASS: {len(commands)} commands rerun, all byte-identical")
