"""``hypertopo`` command line.

Every subcommand prints one JSON document to stdout.  Exit status is 0 on
success or a passing check, 1 when a check is verified to fail and 2 on
bad usage, unreadable input or a violated precondition.
"""
from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from . import colorings, core, generators, groups, intersected, treeforest
from .errors import HypertopoError
from .graph import Graph
from .io import (
    DocumentError,
    dumps,
    hypergraph_to_dict,
    parse_graph,
    parse_hypergraph,
    set_colored_to_dict,
    to_dot,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SEED_ENV = "HYPERTOPO_SEED"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_USAGE)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_hypergraph(path: str):
    return parse_hypergraph(_read(path), path)


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise HypertopoError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


# --------------------------------------------------------------------------
# command handlers return (payload, exit status)


def _verify_one(path: str, strict: bool) -> dict:
    h, _ = _load_hypergraph(path)
    report = core.verify_3i(h, strict=strict)
    full = core.structure_report(h).to_dict()
    for key in ("independence", "intersection", "integrity", "strict", "passed"):
        full.pop(key, None)
    return {"source": path, "passed": report.passed, "report": report.to_dict(), "structure": full}


def cmd_verify(args) -> tuple:
    if args.jobs > 1 and len(args.files) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_one, args.files, [args.strict] * len(args.files)))
    else:
        results = [_verify_one(p, args.strict) for p in args.files]
    passed = all(r["passed"] for r in results)
    payload = results[0] if len(results) == 1 else {"passed": passed, "documents": results}
    return payload, EXIT_OK if passed else EXIT_FAIL


def cmd_complement(args) -> tuple:
    h, labels = _load_hypergraph(args.file)
    return hypergraph_to_dict(core.complement_set(h), labels), EXIT_OK


def cmd_reduce(args) -> tuple:
    h, labels = _load_hypergraph(args.file)
    r = core.graham_reduction(h)
    return {"reduced": hypergraph_to_dict(r, labels), "empty": not r.edges}, EXIT_OK


def cmd_graph(args) -> tuple:
    h, _ = _load_hypergraph(args.file)
    g = intersected.build_v_intersected(h)
    if args.out == "dot":
        return to_dot(g), EXIT_OK
    return set_colored_to_dict(g), EXIT_OK


def cmd_metrics(args) -> tuple:
    h, _ = _load_hypergraph(args.file)
    m = intersected.intersected_metrics(h)
    conn = intersected.hyperedge_connectivity(h)
    return {"metrics": m, "connectivity": conn}, EXIT_OK


def cmd_cycle(args) -> tuple:
    h, _ = _load_hypergraph(args.file)
    c = intersected.find_proper_hamiltonian_cycle(h)
    if c is None:
        return {"found": False}, EXIT_FAIL
    return {
        "found": True,
        "edge_order": list(c.edge_order),
        "edges": [list(h.edges[i]) for i in c.edge_order],
        "representatives": list(c.representatives),
    }, EXIT_OK


def cmd_group(args) -> tuple:
    M = args.modulus
    if args.action == "table":
        t = groups.group_table(M, args.zero, args.offset)
        return {"modulus": M, "zero": args.zero, "offset": args.offset,
                "rows": [t.row(i) for i in range(1, M + 1)]}, EXIT_OK
    if args.file is None:
        raise HypertopoError(f"group {args.action} needs a hypergraph document")
    h, labels = _load_hypergraph(args.file)
    if args.action == "shift":
        return hypergraph_to_dict(groups.shift_set(h, args.by, M), labels), EXIT_OK
    fam = groups.generate_hypergraph_group(h, M)
    report = groups.verify_every_zero(fam, offset=args.offset)
    payload = {
        "passed": report.passed,
        "checks": report.checks,
        "notes": report.notes,
        "members": [hypergraph_to_dict(fam.member(i))["edges"] for i in range(1, M + 1)],
    }
    return payload, EXIT_OK if report.passed else EXIT_FAIL


def cmd_gen(args) -> tuple:
    if args.family == "strong":
        h = generators.strong_hyperedge_set(args.m, args.t)
    else:
        h = generators.cyclic_k_uniform(args.n, args.k)
    return hypergraph_to_dict(h), EXIT_OK


def cmd_enum(args) -> tuple:
    found = generators.enumerate_3i(args.ground, strict=not args.no_strict)
    return {"ground": args.ground, "count": len(found),
            "families": [[list(e) for e in h.edges] for h in found]}, EXIT_OK


def cmd_keys(args) -> tuple:
    seed = args.seed if args.seed is not None else _default_seed()
    pairs = generators.key_matchings(args.ground, limit=args.limit, seed=seed)
    return {"ground": args.ground, "seed": seed, "count": len(pairs),
            "pairs": [{"family": [list(e) for e in a.edges], "complement": [list(e) for e in b.edges]}
                      for a, b in pairs]}, EXIT_OK


def cmd_count(args) -> tuple:
    if args.what == "forests":
        return {"n": args.n, "forests": treeforest.forest_count(args.n)}, EXIT_OK
    if args.graph is not None:
        g = parse_graph(_read(args.graph), args.graph)["graph"]
        source = args.graph
    elif args.bipartite is not None:
        g = Graph.complete_bipartite(args.bipartite, args.n)
        source = f"K_{{{args.bipartite},{args.n}}}"
    else:
        g = Graph.complete(args.n)
        source = f"K_{args.n}"
    return {"graph": source, "spanning_trees": treeforest.spanning_tree_count(g)}, EXIT_OK


def _total_coloring(path: str) -> colorings.TotalColoring:
    doc = parse_graph(_read(path), path)
    return colorings.TotalColoring(
        doc["graph"], doc["vertex_colors"] or {}, doc["edge_colors"] or {},
        None if doc["X"] is None else (frozenset(doc["X"]),
                                       frozenset(range(doc["graph"].vertex_count)) - set(doc["X"])),
    )


def cmd_color(args) -> tuple:
    c = _total_coloring(args.file)
    if args.kind == "set-ordered-graceful":
        report = colorings.verify_set_ordered_graceful(c)
    elif args.kind == "6c":
        report = colorings.verify_6c_labeling(c)
    else:
        report = colorings.verify_kd_total_coloring(
            c, colorings.KdParams(args.kind, args.k, args.d, args.strong)
        )
    return report, EXIT_OK if report.passed else EXIT_FAIL


def cmd_topcode(args) -> tuple:
    t = colorings.build_topcode_matrix(_total_coloring(args.file))
    return {"columns": len(t.columns), "rows": t.rows}, EXIT_OK


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hypertopo", description="Hyperedge set verification and generation.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("verify", help="3I report and structure of hypergraph documents")
    s.add_argument("files", nargs="+")
    s.add_argument("--strict", action="store_true", help="Integrity is required for a pass")
    s.add_argument("--jobs", type=int, default=1, help="worker processes for several files")
    s.set_defaults(func=cmd_verify)

    for name, func, text in (
        ("complement", cmd_complement, "complementary hyperedge set"),
        ("reduce", cmd_reduce, "Graham reduction"),
        ("metrics", cmd_metrics, "degrees, diameter, domination and connectivity"),
        ("cycle", cmd_cycle, "search for a proper hyperedge-hamiltonian cycle"),
    ):
        s = sub.add_parser(name, help=text)
        s.add_argument("file")
        s.set_defaults(func=func)

    s = sub.add_parser("graph", help="v-intersected graph")
    s.add_argument("file")
    s.add_argument("--out", choices=("dot", "json"), default="json")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("group", help="shift families over [1,M]")
    s.add_argument("action", choices=("shift", "table", "check"))
    s.add_argument("file", nargs="?")
    s.add_argument("--modulus", type=int, required=True)
    s.add_argument("--by", type=int, default=1, help="shift amount for 'shift'")
    s.add_argument("--zero", type=int, default=1, help="zero index for 'table'")
    s.add_argument("--offset", type=int, default=0, help="index law i+j-k-offset")
    s.set_defaults(func=cmd_group)

    s = sub.add_parser("gen", help="generated families")
    gsub = s.add_subparsers(dest="family", required=True, parser_class=_Parser)
    g = gsub.add_parser("strong")
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--t", type=int, required=True)
    g.set_defaults(func=cmd_gen)
    g = gsub.add_parser("cyclic")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("enum", help="all 3I families over [1,n]")
    s.add_argument("--ground", type=int, required=True)
    s.add_argument("--no-strict", action="store_true")
    s.set_defaults(func=cmd_enum)

    s = sub.add_parser("keys", help="key matchings over [1,n]")
    s.add_argument("--ground", type=int, required=True)
    s.add_argument("--limit", type=int, default=10)
    s.add_argument("--seed", type=int, default=None, help=f"defaults to ${SEED_ENV} or 0")
    s.set_defaults(func=cmd_keys)

    s = sub.add_parser("count", help="spanning trees and labeled forests")
    s.add_argument("what", choices=("trees", "forests"))
    s.add_argument("--n", type=int, default=0)
    kind = s.add_mutually_exclusive_group()
    kind.add_argument("--complete", action="store_true", help="K_n (the default)")
    kind.add_argument("--bipartite", type=int, metavar="M", help="K_{M,n}")
    kind.add_argument("--graph", metavar="FILE", help="graph document")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("color", help="coloring verifiers")
    s.add_argument("action", choices=("verify",))
    s.add_argument("file")
    s.add_argument("--kind", required=True,
                   choices=colorings.KINDS + ("set-ordered-graceful", "6c"))
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--d", type=int, default=1)
    s.add_argument("--strong", action="store_true")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("topcode", help="Topcode-matrix of a colored graph")
    s.add_argument("file")
    s.set_defaults(func=cmd_topcode)
    return p


def run_command(argv: Optional[Sequence[str]] = None) -> tuple[int, str, str]:
    """Run one command; returns (exit status, stdout text, stderr text)."""
    parser = build_parser()
    err = []
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    try:
        payload, status = args.func(args)
    except DocumentError as exc:
        err.append(f"hypertopo: error: {exc}\n")
        return EXIT_USAGE, dumps({"error": exc.to_dict()}), "".join(err)
    except (HypertopoError, OSError) as exc:
        err.append(f"hypertopo: error: {exc}\n")
        return EXIT_USAGE, dumps({"error": {"kind": type(exc).__name__, "message": str(exc)}}), "".join(err)
    out = payload if isinstance(payload, str) else dumps(payload)
    return status, out, ""


def main(argv: Optional[Sequence[str]] = None) -> int:
    status, out, err = run_command(argv)
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    return status


if __name__ == "__main__":
    sys.exit(main())
