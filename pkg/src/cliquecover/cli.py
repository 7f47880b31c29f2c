"""Command-line front end.  Every command prints one JSON document on stdout.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import counting, families, oracle, signatures
from .model import CapExceededError, CollectionError, iter_bits, label_key, read_path
from .partition import build_gamma_partition, canonical_order
from .quotient import export_quotient, quotient_matrix


def _dump(obj: object) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _nodes(text: str) -> list[str]:
    return [x for x in text.replace(",", " ").split() if x]


def _load(args: argparse.Namespace):
    names = args.names.split(",") if args.names else None
    c = read_path(args.input, args.format, names)
    return c, build_gamma_partition(c, max_cliques=args.max_cliques)


def _ordinals(J: int) -> list[int]:
    return [j + 1 for j in iter_bits(J)]


def cmd_gamma(args: argparse.Namespace) -> dict:
    c, p = _load(args)
    return {
        "cells": [
            {"J": c.index_names(J), "nodes": p.cell_nodes(J), "gamma": p.gamma(J)}
            for J in p.cells
        ]
    }


def cmd_quotient(args: argparse.Namespace) -> str:
    _, p = _load(args)
    return export_quotient(quotient_matrix(p), args.quotient_format).rstrip("\n")


def cmd_families(args: argparse.Namespace) -> dict:
    if args.maximal:
        if args.m is None:
            raise CollectionError("--maximal needs -m")
        found = families.enumerate_maximal_intersecting(args.m, max_m=args.max_m)
        return {
            "m": args.m,
            "count": len(found),
            "families": [[_ordinals(J) for J in canonical_order(f)] for f in found],
        }
    c, p = _load(args)
    stream = (
        families.enumerate_path_intersecting_over(p.support)
        if args.path
        else families.enumerate_intersecting_over(p.support)
    )
    found = [[c.index_names(J) for J in f] for f in stream]
    return {"kind": "path" if args.path else "intersecting", "count": len(found), "families": found}


def cmd_count(args: argparse.Namespace) -> dict:
    c, p = _load(args)
    if args.all:
        return {"all": str(counting.count_all_cliques(p))}
    if args.nontrivial:
        return {"nontrivial": str(counting.count_nontrivial_cliques(c, max_cliques=args.max_cliques))}
    if args.edges:
        return {"edges": str(counting.count_edges_degree(p))}
    if args.method == "pie":
        value = counting.count_r_cliques_pie(c, args.r, max_cliques=args.max_cliques)
    elif args.method == "gf":
        value = counting.clique_gf(p)[args.r] if args.r else 1
    else:
        value = counting.count_r_cliques_maximal(p, args.r)
    return {"r": args.r, "count": str(value)}


def cmd_maximal(args: argparse.Namespace) -> dict:
    c, p = _load(args)
    return {
        "maximal_cliques": [
            {"nodes": list(mc.nodes), "support": [c.index_names(J) for J in canonical_order(mc.support)]}
            for mc in counting.enumerate_maximal_cliques(p)
        ]
    }


def cmd_containing(args: argparse.Namespace) -> dict:
    _, p = _load(args)
    H = _nodes(args.nodes)
    return {"nodes": H, "count": str(counting.count_cliques_containing(p, H))}


def cmd_extent(args: argparse.Namespace) -> dict:
    _, p = _load(args)
    H = _nodes(args.nodes)
    return {"nodes": H, "extent": sorted(counting.clique_extent(p, H), key=label_key)}


def cmd_gf(args: argparse.Namespace) -> dict:
    _, p = _load(args)
    return {"coefficients": [str(x) for x in counting.clique_gf(p).to_list()]}


def cmd_connected(args: argparse.Namespace) -> dict:
    _, p = _load(args)
    if args.nodes:
        H = _nodes(args.nodes)
        return {"nodes": H, "connected": signatures.is_connected_subgraph(p, H)}
    if args.gf:
        return {"coefficients": [str(x) for x in signatures.connected_subgraph_gf(p).to_list()]}
    return {"connected_signatures": str(signatures.count_connected_signatures(p))}


def cmd_clique_number(args: argparse.Namespace) -> dict:
    _, p = _load(args)
    return {"clique_number": counting.clique_number(p)}


def cmd_verify(args: argparse.Namespace) -> tuple[dict, int]:
    results = oracle.verify(args.seed, args.instances, args.max_n, args.max_m)
    totals: dict[str, list[int]] = {}
    failures = []
    for index, (c, report) in enumerate(results):
        for check in report.checks:
            tally = totals.setdefault(check.name, [0, 0])
            tally[0 if check.passed else 1] += 1
            if not check.passed:
                failures.append(
                    {"instance": index, "check": check.name, "cliques": [sorted(k, key=label_key) for k in c.cliques]}
                )
    passed = not failures
    return (
        {
            "seed": args.seed,
            "instances": args.instances,
            "passed": passed,
            "checks": [{"name": k, "passed": v[0], "failed": v[1]} for k, v in totals.items()],
            "failures": failures,
        },
        0 if passed else 1,
    )


def _add_source(p: argparse.ArgumentParser, format_flag: str = "--format") -> argparse.ArgumentParser:
    p.add_argument("-i", "--input", help="clique file (default: stdin)")
    p.add_argument(format_flag, dest="format", choices=["lines", "json"], default="lines", help="input format")
    p.add_argument("--names", help="comma-separated display names for the cliques, e.g. A,B,C")
    p.add_argument("--max-cliques", type=int, default=None, help="raise the cap on m (default 20)")
    p.add_argument("--output", choices=["json"], default="json", help=argparse.SUPPRESS)
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliquecover", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, func, helptext: str, **kw) -> argparse.ArgumentParser:
        p = _add_source(sub.add_parser(name, help=helptext), **kw)
        p.set_defaults(func=func)
        return p

    command("gamma", cmd_gamma, "cells of the partition")

    q = command("quotient", cmd_quotient, "quotient weight matrix", format_flag="--input-format")
    q.add_argument("--format", dest="quotient_format", choices=["json", "dot", "csv"], default="json")

    f = command("families", cmd_families, "intersecting families")
    f.add_argument("--maximal", action="store_true", help="maximal intersecting families on [m]")
    f.add_argument("-m", type=int, help="ground set size for --maximal")
    f.add_argument("--max-m", type=int, default=None, help="raise the cap on -m (default 7)")
    f.add_argument("--path", action="store_true", help="path-intersecting families over the input's cells")

    cnt = command("count", cmd_count, "clique and edge counts")
    what = cnt.add_mutually_exclusive_group(required=True)
    what.add_argument("-r", type=int, help="count cliques with r nodes")
    what.add_argument("--all", action="store_true", help="all cliques with at least one node")
    what.add_argument(
        "--nontrivial", action="store_true", help="cliques with at least three nodes inside some input clique"
    )
    what.add_argument("--edges", action="store_true", help="edges of the graph union")
    cnt.add_argument(
        "--method",
        choices=["maximal", "gf", "pie"],
        default="maximal",
        help="for -r: inclusion-exclusion over the maximal cliques (default), the generating "
        "function, or inclusion-exclusion over the input cliques",
    )

    command("maximal", cmd_maximal, "maximal cliques")
    command("containing", cmd_containing, "number of cliques containing --nodes").add_argument(
        "--nodes", required=True, help="comma-separated node labels"
    )
    command("extent", cmd_extent, "union of the maximal cliques containing --nodes").add_argument(
        "--nodes", required=True, help="comma-separated node labels"
    )
    command("gf", cmd_gf, "clique generating function coefficients")

    con = command("connected", cmd_connected, "connected induced subgraphs")
    con.add_argument("--gf", action="store_true", help="coefficients by subgraph size")
    con.add_argument("--nodes", help="test whether these nodes induce a connected subgraph")

    command("clique-number", cmd_clique_number, "size of a largest clique")

    v = sub.add_parser("verify", help="cross-check formulas against brute force on random instances")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--instances", type=int, default=50)
    v.add_argument("--max-n", type=int, default=15)
    v.add_argument("--max-m", type=int, default=5)
    v.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except (CollectionError, CapExceededError, KeyError, ValueError, OSError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"cliquecover: error: {message}", file=sys.stderr)
        return 2
    code = 0
    if isinstance(result, tuple):
        result, code = result
    print(result if isinstance(result, str) else _dump(result))
    return code


def main() -> None:
    sys.exit(run())
