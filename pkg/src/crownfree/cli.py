"""Command-line front door.

Exit codes: 0 success / property holds, 1 usage or input error, 2 property
fails (a crown was found when checking crown-freeness, or a suite failed),
3 budget exceeded (a non-exhaustive result was still emitted).  JSON output
is a stable contract carrying a top-level "schema" field; text output is
human-oriented only.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import discharging, lemmas
from .crowns import find_crown, link_graph
from .graphs import LinearityError, LinearThreeGraph, parse_json_graph, parse_l3g
from .search import exact_ex, lower_bound_construction, random_linear_graph

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PROPERTY_FAILS = 2
EXIT_BUDGET = 3


def _load_graph(path: str) -> LinearThreeGraph:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json") or text.lstrip().startswith("{"):
        return parse_json_graph(text)
    return parse_l3g(text)


def _default_threads() -> int:
    env = os.environ.get("CROWNFREE_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _emit(obj: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(obj, indent=2))
    else:
        print(text)


def cmd_check(args) -> int:
    H = _load_graph(args.file)
    w = find_crown(H)
    if w is None:
        _emit({"schema": "crownfree/check-v1", "crown_free": True},
              args.json, "crown-free")
        return EXIT_OK
    obj = {"schema": "crownfree/check-v1", "crown_free": False, "witness": w.to_json_obj(H)}
    _emit(obj, args.json, json.dumps(w.to_json_obj(H)))
    return EXIT_PROPERTY_FAILS


def cmd_exact(args) -> int:
    cert = exact_ex(
        args.n,
        max_seconds=args.max_seconds,
        max_nodes=args.max_nodes,
        threads=args.threads,
        unsafe_5n3_prune=args.unsafe_5n3_prune,
    )
    obj = {"schema": "crownfree/certificate-v1", **cert.to_json_obj()}
    text = (
        f"ex({cert.n}, crown) = {cert.value} "
        f"({'exhaustive' if cert.exhaustive else 'INCOMPLETE'}; "
        f"{cert.nodes_explored} nodes, {cert.elapsed_seconds:.2f}s)"
    )
    _emit(obj, args.json, text)
    return EXIT_OK if cert.exhaustive else EXIT_BUDGET


def cmd_construct(args) -> int:
    sys.stdout.write(lower_bound_construction(args.n).to_l3g())
    return EXIT_OK


def cmd_random(args) -> int:
    sys.stdout.write(random_linear_graph(args.n, args.m, args.seed).to_l3g())
    return EXIT_OK


def cmd_link(args) -> int:
    H = _load_graph(args.file)
    if not (0 <= args.edge < len(H.edges)):
        print(f"edge id {args.edge} out of range (m={len(H.edges)})", file=sys.stderr)
        return EXIT_USAGE
    G = link_graph(H, args.edge)
    if args.dot:
        sys.stdout.write(G.to_dot())
    else:
        obj = {
            "schema": "crownfree/link-v1",
            "base": list(G.base),
            "vertices": sorted(G.vertices),
            "colored_edges": [list(e) for e in G.colored_edges],
        }
        print(json.dumps(obj, indent=2))
    return EXIT_OK


def cmd_discharge(args) -> int:
    H = _load_graph(args.file)
    degs = H.degrees()
    n = H.n
    large = sorted(discharging.large_set(H))
    per_edge = [
        {
            "edge": list(H.edge(e)),
            "degree_vector": list(H.degree_vector(e).as_tuple()),
            "s": discharging.s_of(H, e),
            "s_star": discharging.s_star(H, e),
        }
        for e in range(len(H.edges))
    ]
    rhs = discharging.lemma2_rhs(n, len(large))
    obj = {
        "schema": "crownfree/discharge-v1",
        "n": n,
        "m": len(H.edges),
        "degrees": degs,
        "large_vertices": large,
        "edges": per_edge,
        "t_star": discharging.t_star(H),
        "lemma2_rhs": {"num": rhs.numerator, "den": rhs.denominator,
                       "gt_14": rhs > 14, "gt_15": rhs > 15},
    }
    # the redistribution trace only applies when the degree sum is 5n + l
    try:
        trace = discharging.build_discharge_sequence(degs)
        obj["trace"] = trace.to_json_obj()
    except discharging.DegreePreconditionError as exc:
        obj["trace"] = None
        obj["trace_skipped_reason"] = str(exc)
    if args.json:
        print(json.dumps(obj, indent=2))
    else:
        print(f"n={n} m={len(H.edges)} T*={obj['t_star']} L={large}")
        print(f"lemma2 rhs = {rhs} (>{14}: {rhs > 14}, >{15}: {rhs > 15})")
        if obj["trace"] is None:
            print(f"trace skipped: {obj['trace_skipped_reason']}")
        else:
            print(f"trace: k={len(obj['trace']['steps'])} residue={obj['trace']['residue']}")
    return EXIT_OK


def cmd_lemmas(args) -> int:
    names = list(lemmas.ALL_SUITES) if args.suite == "all" else [args.suite]
    reports = [lemmas.run_suite(nm, seed=args.seed, count=args.count) for nm in names]
    if args.json:
        print(json.dumps(
            {"schema": "crownfree/reports-v1", "reports": [r.to_json_obj() for r in reports]},
            indent=2,
        ))
    else:
        for r in reports:
            print(r.summary())
        if args.suite == "order11":
            print(lemmas.min_counterexample_order())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_PROPERTY_FAILS


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="crownfree",
                                description="Crown-free linear 3-graph toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="validate a graph and report crown-freeness")
    c.add_argument("file")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("exact", help="exact crown Turán number by exhaustive search")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--threads", type=int, default=_default_threads())
    c.add_argument("--max-seconds", type=float, default=None)
    c.add_argument("--max-nodes", type=int, default=None)
    c.add_argument("--unsafe-5n3-prune", action="store_true",
                   help="prune with the 5n/3 theorem bound (exploratory runs only)")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_exact)

    c = sub.add_parser("construct", help="lower-bound construction in L3G format")
    c.add_argument("--n", type=int, required=True)
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("random", help="seeded random linear graph in L3G format")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--seed", type=int, required=True)
    c.set_defaults(func=cmd_random)

    c = sub.add_parser("link", help="colored link graph of an edge")
    c.add_argument("file")
    c.add_argument("--edge", type=int, required=True)
    c.add_argument("--dot", action="store_true")
    c.set_defaults(func=cmd_link)

    c = sub.add_parser("discharge", help="degrees, star sums, T*, and the trace")
    c.add_argument("file")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_discharge)

    c = sub.add_parser("lemmas", help="run the lemma replay suites")
    c.add_argument("--suite", default="all",
                   choices=["all"] + sorted(lemmas.ALL_SUITES))
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--count", type=int, default=1000)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_lemmas)

    return p


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (LinearityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
