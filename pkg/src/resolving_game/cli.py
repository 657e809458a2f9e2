"""Command-line entry points. Each subcommand is a thin dispatcher over the
library; ``serve`` starts the HTTP session service."""

from __future__ import annotations

import argparse
import json
import sys

from .families import FamilySpec, generate
from .graphs import GuardExceededError, load_graph, save_graph
from .pairing import find_dim_pairing, find_pairing_of_size
from .resolving import metric_dimension
from .solver import Solver
from . import verify as verify_mod


def _cmd_dim(args) -> int:
    g = load_graph(args.graph)
    res = metric_dimension(g, collect_bases=args.bases, guard=args.guard)
    out = {"dimension": res.dimension, "subsets_examined": res.subsets_examined}
    if args.bases:
        out["bases"] = [list(b) for b in res.bases]
    print(json.dumps(out))
    return 0


def _cmd_solve(args) -> int:
    g = load_graph(args.graph)
    solver = Solver(g, guard=args.guard)
    if args.record:
        print(json.dumps(solver.outcome_record().to_dict()))
    else:
        value = solver.solve(args.first)
        print(
            json.dumps(
                {
                    "first_player": args.first,
                    "winner": value.winner,
                    "winner_moves": value.winner_moves,
                }
            )
        )
    return 0


def _cmd_pairing(args) -> int:
    g = load_graph(args.graph)
    try:
        found = find_dim_pairing(g)
        searched_sizes = [metric_dimension(g).dimension]
        if found is None and not args.dim_only:
            dim = searched_sizes[0]
            for k in range(dim + 1, g.n // 2 + 1):
                found = find_pairing_of_size(g, k)
                searched_sizes.append(k)
                if found is not None:
                    break
    except GuardExceededError as exc:
        print(json.dumps({"pairing": None, "status": "unknown", "reason": str(exc)}))
        return 1
    if found is None:
        print(json.dumps({"pairing": None, "status": "none", "sizes_tried": searched_sizes}))
    else:
        print(json.dumps({"pairing": found.to_lists(), "status": "found"}))
    return 0


def _cmd_family(args) -> int:
    spec = FamilySpec(args.kind, tuple(args.params))
    g = generate(spec)
    if args.out:
        save_graph(g, args.out)
        print(json.dumps({"written": args.out, "n": g.n, "edges": len(g.edges)}))
    else:
        print(g.to_json())
    return 0


def _print_reports(reports, as_json: bool) -> int:
    if as_json:
        print(
            json.dumps(
                [
                    {
                        "theorem": r.theorem,
                        "passed": r.passed,
                        "expected": r.expected,
                        "computed": r.computed,
                        "runtime_s": r.runtime_s,
                        "witness": r.witness,
                    }
                    for r in reports
                ],
                default=str,
            )
        )
    else:
        for r in reports:
            print(r.summary())
    return 0 if all(r.passed for r in reports) else 1


def _cmd_verify(args) -> int:
    target = args.target
    if target == "all":
        reports = verify_mod.default_suite()
    elif target == "petersen":
        reports = [verify_mod.verify_petersen()]
    elif target == "trees":
        reports = []
        for edges in (
            (4, 0, 1, 0, 2, 0, 3),
            (5, 0, 1, 0, 2, 0, 3, 0, 4),
            (7, 0, 1, 1, 2, 0, 3, 3, 4, 0, 5, 5, 6),
            (10, 1, 0, 0, 2, 0, 3, 3, 4, 0, 5, 5, 6, 0, 7, 7, 8, 8, 9),
        ):
            reports.append(
                verify_mod.verify_tree(generate(FamilySpec("tree_from_edges", edges)))
            )
    elif target == "bouquet":
        reports = [verify_mod.verify_bouquet(tuple(args.args))]
    elif target == "multipartite":
        reports = [verify_mod.verify_multipartite(tuple(args.args))]
    elif target == "grid":
        reports = [verify_mod.verify_grid(*args.args[:2])]
    elif target == "torus":
        reports = [verify_mod.verify_torus(*args.args[:2])]
    elif target == "gk":
        reports = [verify_mod.verify_gk(args.args[0] if args.args else 3)]
    elif target == "sweep":
        sweep = verify_mod.run_property_sweep(args.max_n)
        print(
            json.dumps(
                {
                    "max_n": sweep.max_n,
                    "graphs_checked": sweep.graphs_checked,
                    "violations": sweep.violations,
                    "runtime_s": sweep.runtime_s,
                }
            )
        )
        return 0 if sweep.passed else 1
    else:
        print(f"unknown verify target {target!r}", file=sys.stderr)
        return 2
    return _print_reports(reports, args.json)


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(
        create_app(
            create_guard=args.guard,
            solve_record_guard=args.solve_record_guard,
        ),
        host=args.host,
        port=args.port,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="resolving-game",
        description="Exact Maker-Breaker resolving game engine and service",
    )
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dim", help="metric dimension of a graph JSON file")
    d.add_argument("graph")
    d.add_argument("--bases", action="store_true", help="also enumerate all bases")
    d.add_argument("--guard", type=int, default=10**7)
    d.set_defaults(func=_cmd_dim)

    s = sub.add_parser("solve", help="solve the game on a graph JSON file")
    s.add_argument("graph")
    s.add_argument("--first", choices=["R", "S"], default="R")
    s.add_argument("--record", action="store_true", help="full outcome record")
    s.add_argument("--guard", type=int, default=16)
    s.set_defaults(func=_cmd_solve)

    pr = sub.add_parser("pairing", help="search for a pairing resolving set")
    pr.add_argument("graph")
    pr.add_argument(
        "--dim-only",
        action="store_true",
        help="only look for a pairing with exactly dim(G) pairs",
    )
    pr.set_defaults(func=_cmd_pairing)

    f = sub.add_parser("family", help="generate a named graph family")
    f.add_argument("kind")
    f.add_argument("params", nargs="*", type=int)
    f.add_argument("--out", help="write graph JSON here instead of stdout")
    f.set_defaults(func=_cmd_family)

    v = sub.add_parser("verify", help="run theorem checks")
    v.add_argument(
        "target",
        choices=[
            "all",
            "trees",
            "petersen",
            "bouquet",
            "multipartite",
            "grid",
            "torus",
            "gk",
            "sweep",
        ],
    )
    v.add_argument("args", nargs="*", type=int)
    v.add_argument("--json", action="store_true", help="machine-readable output")
    v.add_argument("--max-n", type=int, default=6, help="sweep size bound")
    v.set_defaults(func=_cmd_verify)

    sv = sub.add_parser("serve", help="run the HTTP session service")
    sv.add_argument("--host", default="127.0.0.1")
    sv.add_argument("--port", type=int, default=8000)
    sv.add_argument("--guard", type=int, default=16)
    sv.add_argument("--solve-record-guard", type=int, default=12)
    sv.set_defaults(func=_cmd_serve)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
