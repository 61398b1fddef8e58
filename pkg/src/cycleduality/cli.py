"""Command line front end.

Subcommands: duality (packing/covering reports), widths (porosity,
cycle width, strategy, play), search (the two falsifier searches), and
generate (seeded random instances).  Reports are pure functions of the
input bytes and flags; all randomness sits behind --seed.

Exit codes: 0 success, 2 bad input or usage, 3 budget exceeded,
4 integrality or other internal failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from typing import Optional

from .engines import (
    bidirected_vertex_duality,
    directed_edge_duality,
    directed_vertex_duality,
    undirected_edge_duality,
)
from .errors import (
    BudgetExceededError,
    CycleDualityError,
    GraphFormatError,
    IntegralityError,
)
from .generators import random_bidirected, random_digraph, random_undirected
from .graphs import Graph, edge_cut, graph_to_obj, parse_graph, serialize_graph
from .oracles import (
    DEFAULT_BUDGET,
    EnumerationBudget,
    max_packing,
    min_hitting,
    search_nullspace_noncycle_fixture,
    search_vertex_question_counterexample,
)
from .reports import DualityReport, report_to_json
from .widths import (
    CopStrategy,
    cycle_porosity,
    cycle_width_bruteforce,
    decomposition_to_obj,
    decomposition_width,
    hitting_sets_Ye,
    induced_cut,
    parse_decomposition,
    play_cops_and_robbers,
)


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}") from exc


def _write_text(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _budget(args) -> EnumerationBudget:
    return EnumerationBudget(
        max_cycles=args.budget_cycles, max_subsets=args.budget_subsets
    )


def _load_graph(args) -> Graph:
    graph = parse_graph(_read_text(args.input))
    if args.kind is not None and args.kind != graph.kind:
        raise GraphFormatError(
            f"--kind {args.kind} does not match the input ({graph.kind})"
        )
    return graph


def _parse_target(spec: str, graph: Graph) -> tuple[str, tuple[str, ...]]:
    """Resolve --target into ("vertices"|"edges", ids)."""
    if spec == "all":
        kind = "edges" if graph.kind == "undirected" else "vertices"
        body = "all"
    elif spec.startswith("vertices="):
        kind, body = "vertices", spec[len("vertices=") :]
    elif spec.startswith("edges="):
        kind, body = "edges", spec[len("edges=") :]
    else:
        raise GraphFormatError(
            "--target must be 'all', 'vertices=...', or 'edges=...'"
        )
    pool = graph.vertex_index if kind == "vertices" else graph.edge_index
    if body == "all":
        return kind, tuple(pool)
    ids = tuple(x for x in body.split(",") if x)
    for x in ids:
        if x not in pool:
            raise GraphFormatError(f"unknown target {kind[:-1]} {x!r}")
    return kind, ids


def cmd_duality(args) -> int:
    graph = _load_graph(args)
    kind, targets = _parse_target(args.target, graph)
    budget = _budget(args)
    if graph.kind == "undirected" and kind == "vertices":
        # log-only mode: no theorem backs this combination, the report
        # carries the observed values and a conjectural flag
        packing = max_packing(graph, targets, "vertices", "vertex", budget)
        hitting = min_hitting(graph, targets, "vertex", budget)
        assert hitting is not None
        report = DualityReport(
            packing=packing,
            hitting=hitting,
            inequality_verified=packing.score >= len(hitting.elements),
            engine="undirected-vertex-logonly",
            verification="oracle",
            conjectural=True,
        )
    elif graph.kind == "undirected":
        report = undirected_edge_duality(graph, targets, budget, args.verify)
    elif graph.kind == "directed" and kind == "edges":
        report = directed_edge_duality(graph, targets, budget, args.verify)
    elif graph.kind == "directed":
        report = directed_vertex_duality(graph, targets, budget, args.verify)
    elif kind == "vertices":
        report = bidirected_vertex_duality(graph, targets, budget, args.verify)
    else:
        raise GraphFormatError(
            "edge targets on signed graphs have no supported engine; "
            "use vertex targets"
        )
    _write_text(report_to_json(report), args.out)
    return 0 if report.inequality_verified or report.conjectural else 4


def _parse_cut(graph: Graph, spec: str):
    side = tuple(x for x in spec.split(",") if x)
    for v in side:
        if v not in graph.vertex_index:
            raise GraphFormatError(f"unknown cut vertex {v!r}")
    return edge_cut(graph, side)


def _decomposition_for(graph: Graph, args, budget: EnumerationBudget):
    if args.decomposition is not None:
        dec = parse_decomposition(_read_text(args.decomposition))
        dec.validate(graph)
        width = decomposition_width(graph, dec, budget, method="oracle")
        return width, dec
    return cycle_width_bruteforce(graph, args.n_cap, budget)


def cmd_widths(args) -> int:
    graph = _load_graph(args)
    budget = _budget(args)
    if args.widths_cmd == "porosity":
        cut = _parse_cut(graph, args.cut)
        r = cycle_porosity(graph, cut, budget)
        obj = {
            "command": "widths-porosity",
            "cut": {
                "side_a": sorted(cut.side_a),
                "side_b": sorted(cut.side_b),
                "edges": list(cut.edges),
            },
            "value": r.value,
            "oracle_value": r.oracle_value,
            "lp_value": None if r.lp_value is None else str(r.lp_value),
            "cross_checked": r.cross_checked,
        }
    elif args.widths_cmd == "cyclewidth":
        width, dec = cycle_width_bruteforce(graph, args.n_cap, budget)
        obj = {
            "command": "widths-cyclewidth",
            "width": width,
            "decomposition": decomposition_to_obj(dec),
        }
    elif args.widths_cmd == "strategy":
        width, dec = _decomposition_for(graph, args, budget)
        ys = hitting_sets_Ye(graph, dec, budget)
        obj = {
            "command": "widths-strategy",
            "width": width,
            "decomposition": decomposition_to_obj(dec),
            "hitting_sets": {
                f"{i}-{j}": sorted(y) for (i, j), y in sorted(ys.items())
            },
            "cuts": {
                f"{i}-{j}": list(induced_cut(graph, dec, (i, j)).edges)
                for (i, j) in sorted(ys)
            },
        }
    else:
        width, dec = _decomposition_for(graph, args, budget)
        strategy = CopStrategy.from_decomposition(graph, dec, budget)
        result = play_cops_and_robbers(graph, strategy)
        obj = {
            "command": "widths-play",
            "width": width,
            "cop_budget": strategy.cop_budget,
            "caught": result.caught,
            "rounds": result.rounds,
            "max_cops": result.max_cops,
            "lines": result.lines,
            "transcript": result.to_obj(),
        }
    _write_text(_dump(obj), args.out)
    return 0


def cmd_search(args) -> int:
    budget = _budget(args)
    if args.search_cmd == "vertex-question":
        try:
            rep = search_vertex_question_counterexample(
                args.n_max, args.seed, args.trials or None, budget
            )
            obj = {"command": "search-vertex-question", **dataclasses.asdict(rep)}
        except BudgetExceededError as exc:
            obj = {
                "command": "search-vertex-question",
                "found": False,
                "budget_exhausted": {"kind": exc.kind, "limit": exc.limit},
                "n_max": args.n_max,
                "seed": args.seed,
                "trials": args.trials or None,
            }
    else:
        try:
            rep = search_nullspace_noncycle_fixture(
                args.n_max, args.seed, args.trials, budget
            )
            obj = {
                "command": "search-nullspace-fixture",
                "found": rep.found,
                "graphs_checked": rep.graphs_checked,
                "vectors_checked": rep.vectors_checked,
                "n_max": rep.n_max,
                "seed": rep.seed,
                "trials": rep.trials,
                "graph": None if rep.graph is None else graph_to_obj(rep.graph),
                "vector": None if rep.vector is None else list(rep.vector),
                "support": list(rep.support),
            }
        except BudgetExceededError as exc:
            obj = {
                "command": "search-nullspace-fixture",
                "found": False,
                "budget_exhausted": {"kind": exc.kind, "limit": exc.limit},
                "n_max": args.n_max,
                "seed": args.seed,
                "trials": args.trials,
            }
    _write_text(_dump(obj), args.out)
    return 0


def cmd_generate(args) -> int:
    kind = args.kind or "directed"
    if kind == "directed":
        graph = random_digraph(args.n, args.m, args.seed)
    elif kind == "undirected":
        graph = random_undirected(args.n, args.m, args.seed)
    elif kind == "bidirected":
        graph = random_bidirected(args.n, args.m, args.seed)
    else:
        raise GraphFormatError(f"unknown graph kind {kind!r}")
    text = serialize_graph(graph)
    if graph_to_obj(parse_graph(text)) != graph_to_obj(graph):
        raise CycleDualityError("generated graph failed the round-trip check")
    _write_text(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycleduality",
        description="Exact cycle packing/covering duality, widths, and pursuit games",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", required=True, help="graph JSON file")
            p.add_argument(
                "--kind",
                choices=["directed", "undirected", "bidirected"],
                help="assert the input graph kind",
            )
        p.add_argument("--budget-cycles", type=int, default=DEFAULT_BUDGET.max_cycles)
        p.add_argument("--budget-subsets", type=int, default=DEFAULT_BUDGET.max_subsets)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", help="write the report here instead of stdout")

    p = sub.add_parser("duality", help="packing/covering duality report")
    common(p)
    p.add_argument(
        "--target",
        default="all",
        help="'all', 'vertices=a,b', 'vertices=all', 'edges=e1,e2', or 'edges=all'",
    )
    p.add_argument(
        "--verify", choices=["off", "oracle", "exhaustive"], default="oracle"
    )
    p.set_defaults(func=cmd_duality)

    p = sub.add_parser("widths", help="porosity, cycle width, strategy, play")
    wsub = p.add_subparsers(dest="widths_cmd", required=True)
    wp = wsub.add_parser("porosity")
    common(wp)
    wp.add_argument("--cut", required=True, help="comma-separated side-A vertices")
    wp.set_defaults(func=cmd_widths)
    for name in ("cyclewidth", "strategy", "play"):
        wp = wsub.add_parser(name)
        common(wp)
        wp.add_argument("--n-cap", type=int, default=8)
        if name != "cyclewidth":
            wp.add_argument(
                "--decomposition", help="decomposition JSON (default: best found)"
            )
        wp.set_defaults(func=cmd_widths)

    p = sub.add_parser("search", help="falsifier searches")
    ssub = p.add_subparsers(dest="search_cmd", required=True)
    sp = ssub.add_parser("vertex-question")
    common(sp, needs_input=False)
    sp.add_argument("--n-max", type=int, default=4)
    sp.add_argument("--trials", type=int, default=0, help="0 = exhaustive sweep")
    sp.set_defaults(func=cmd_search)
    sp = ssub.add_parser("nullspace-fixture")
    common(sp, needs_input=False)
    sp.add_argument("--n-max", type=int, default=6)
    sp.add_argument("--trials", type=int, default=5000)
    sp.set_defaults(func=cmd_search)

    p = sub.add_parser("generate", help="seeded random instance")
    p.add_argument(
        "--kind", choices=["directed", "undirected", "bidirected"], default="directed"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the graph here instead of stdout")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (IntegralityError, CycleDualityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except KeyError as exc:
        print(f"error: unknown id {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
