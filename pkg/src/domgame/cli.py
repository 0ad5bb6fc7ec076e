"""``domgame`` command line: compute, classify, per-vertex, family, verify, scan."""

from __future__ import annotations

import argparse
import json
import re
import sys
from collections.abc import Iterable, Iterator
from typing import Any

from . import families as fam
from .classify import (ClassificationError, classify, regression_claims, problem3_summary,
                       scan_problem1, scan_problem3, scan_theorems, verify_cor5a, verify_tree)
from .enumeration import MAX_ENUM_N, enumerate_connected_labeled, enumerate_trees
from .formats import emit_edge_list, emit_graph6, read_edge_list, read_graph6
from .game import GameSolver, Player, Variant, solve
from .graph import Graph, GraphError, is_connected

EXIT_OK, EXIT_USAGE, EXIT_FALSIFIED = 0, 1, 2


class UsageError(Exception):
    pass


# family expressions

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")

_FAMILIES = {
    "path": (1, fam.path),
    "cycle": (1, fam.cycle),
    "complete": (1, fam.complete),
    "star": (1, fam.star),
    "empty": (1, fam.empty),
    "paw": (0, fam.paw),
    "F": (1, fam.family_F),
    "D15": (0, fam.family_D15),
    "G": (1, fam.family_G),
    "corona": ((1, 2), fam.corona),
    "cartesian": (2, fam.cartesian_product),
    "direct": (2, fam.direct_product),
}

_ALIASES = {"G_r": "G", "F_4k": "F", "D_15": "D15", "K": "complete", "P": "path", "C": "cycle"}


def _tokens(text: str) -> list[str | int]:
    out: list[str | int] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        num, name, sym = m.groups()
        if num is not None:
            out.append(int(num))
        elif name is not None:
            out.append(name)
        elif sym is not None and sym.strip():
            if sym not in "(),":
                raise GraphError(f"unexpected character {sym!r} in family spec")
            out.append(sym)
        pos = m.end()
    return out


def family_spec_parse(text: str) -> Graph:
    """Build a graph from an expression such as ``direct(paw,complete(2))``.

    Names: path, cycle, complete, star, empty, paw, F, D15, G, corona,
    cartesian, direct. Integer arguments go to the size families; graph
    arguments to corona / cartesian / direct. Zero-argument names may omit
    the parentheses.
    """
    toks = _tokens(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else None

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if tok is None or (expected is not None and tok != expected):
            raise GraphError(f"family spec {text!r}: expected {expected or 'a term'}, got {tok!r}")
        pos += 1
        return tok

    def term():
        tok = take()
        if isinstance(tok, int):
            return tok
        if tok in ("(", ")", ","):
            raise GraphError(f"family spec {text!r}: unexpected {tok!r}")
        name = _ALIASES.get(tok, tok)
        if name not in _FAMILIES:
            raise GraphError(f"unknown family {tok!r}")
        arity, builder = _FAMILIES[name]
        args = []
        if peek() == "(":
            take("(")
            if peek() != ")":
                args.append(term())
                while peek() == ",":
                    take(",")
                    args.append(term())
            take(")")
        allowed = arity if isinstance(arity, tuple) else (arity,)
        if len(args) not in allowed:
            raise GraphError(f"{name} takes {' or '.join(map(str, allowed))} argument(s), got {len(args)}")
        wants_graph = name in ("corona", "cartesian", "direct")
        for a in args:
            if wants_graph != isinstance(a, Graph):
                kind = "graph" if wants_graph else "integer"
                raise GraphError(f"{name} expects {kind} arguments")
        return builder(*args)

    G = term()
    if pos != len(toks):
        raise GraphError(f"trailing input in family spec {text!r}")
    if not isinstance(G, Graph):
        raise GraphError(f"family spec {text!r} is a number, not a graph")
    return G


def _family_from_args(args: argparse.Namespace) -> Graph:
    name = args.family.strip()
    base = _ALIASES.get(name, name)
    if base == "G" and "(" not in name:
        if args.r is None:
            raise UsageError("--family G_r needs --r")
        return fam.family_G(args.r)
    if base == "F" and "(" not in name:
        if args.k is None:
            raise UsageError("--family F needs --k")
        return fam.family_F(args.k)
    return family_spec_parse(name)


# input / output helpers


def _graphs(args: argparse.Namespace) -> list[Graph]:
    sources = [s for s in (args.family, args.graph6, args.edges) if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --family, --graph6, --edges")
    if args.family is not None:
        return [_family_from_args(args)]
    if args.graph6 is not None:
        graphs = list(read_graph6(args.graph6))
        if not graphs:
            raise UsageError(f"no graphs in {args.graph6}")
        return graphs
    return [read_edge_list(args.edges)]


def _order(args: argparse.Namespace, G: Graph) -> list[int] | None:
    return list(range(G.n))[::-1] if getattr(args, "reverse_order", False) else None


def _emit(rows: Iterable[dict[str, Any]], fmt: str, human_key: str | None = None,
          out=None) -> None:
    out = out or sys.stdout
    header_done = False
    for row in rows:
        if fmt == "json":
            out.write(json.dumps(row, sort_keys=False) + "\n")
        elif fmt == "tsv":
            if not header_done:
                out.write("\t".join(row) + "\n")
                header_done = True
            out.write("\t".join(_cell(v) for v in row.values()) + "\n")
        else:
            if human_key is not None:
                out.write(f"{row[human_key]}\n")
            else:
                out.write("  ".join(f"{k}={_cell(v)}" for k, v in row.items()) + "\n")


def _cell(v: Any) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v)
    return str(v)


# verbs


def cmd_compute(args) -> int:
    variant, starter = Variant(args.variant), Player(args.starter)
    rows = []
    for G in _graphs(args):
        value = solve(G, variant, starter, _order(args, G))
        rows.append({"graph": emit_graph6(G), "variant": variant.value, "starter": starter.value,
                     "value": value})
    _emit(rows, args.format, human_key="value")
    return EXIT_OK


def cmd_classify(args) -> int:
    rows, code = [], EXIT_OK
    for G in _graphs(args):
        try:
            label = classify(G, _order(args, G))
        except ClassificationError as exc:
            rows.append({"graph": emit_graph6(G), "gamma_cg": exc.gamma_cg,
                         "gamma_tcg": exc.gamma_tcg, "class": None})
            code = EXIT_FALSIFIED
            continue
        rows.append({"graph": emit_graph6(G), **label.to_dict()})
    _emit(rows, args.format)
    return code


def cmd_per_vertex(args) -> int:
    variant, starter = Variant(args.variant), Player(args.starter)
    rows = []
    for G in _graphs(args):
        solver = GameSolver(G, variant, _order(args, G))
        values = solver.per_vertex_values(starter)
        rows.append({"graph": emit_graph6(G), "variant": variant.value, "starter": starter.value,
                     "values": {G.label(v): values[v] for v in sorted(values)}})
    _emit(rows, args.format)
    return EXIT_OK


def cmd_family(args) -> int:
    for G in _graphs(args):
        if args.format == "json":
            row = {"graph": emit_graph6(G), "n": G.n, "m": G.m, "edges": G.edges(),
                   "labels": list(G.labels) if G.labels else None, "connected": is_connected(G)}
            sys.stdout.write(json.dumps(row) + "\n")
        elif args.format == "tsv":
            sys.stdout.write("u\tv\n" + "".join(f"{u}\t{v}\n" for u, v in G.edges()))
        else:
            sys.stdout.write(emit_edge_list(G))
    return EXIT_OK


def _connected_upto(max_n: int, least: int = 2) -> Iterator[Graph]:
    for n in range(least, max_n + 1):
        yield from enumerate_connected_labeled(n)


def product_factor_pairs(max_vertices: int = 12, max_factor: int = MAX_ENUM_N) -> Iterator[tuple[Graph, Graph]]:
    """Every pair of labelled connected non-trivial factors with n(G) <= n(H) and n(G) n(H) <= max_vertices.

    Products commute up to isomorphism, so ordered pairs with n(G) > n(H) add nothing.
    """
    for a in range(2, max_factor + 1):
        for b in range(a, max_factor + 1):
            if a * b > max_vertices:
                continue
            for G in enumerate_connected_labeled(a):
                for H in enumerate_connected_labeled(b):
                    yield G, H


def _aggregate(claim: str, results: Iterable) -> dict[str, Any]:
    checked = failed = 0
    first_bad = None
    for r in results:
        checked += 1
        if not r.holds:
            failed += 1
            if first_bad is None:
                first_bad = r.to_dict()
    row = {"claim": claim, "holds": failed == 0, "checked": checked, "failed": failed}
    if first_bad is not None:
        row["counterexample"] = first_bad
    return row


def run_suite(suite: str, max_n: int, workers: int = 1, reverse: bool = False,
              slow: bool = True) -> list[dict[str, Any]]:
    """Run a named verification suite and return one summary row per claim."""
    rows: list[dict[str, Any]] = []
    if suite in ("paper", "all"):
        for name, check in regression_claims(slow=slow):
            r = check()
            rows.append(r.to_dict())
    if suite in ("paper", "theorems", "all"):
        for n in range(2, max_n + 1):
            t3, p2, p4 = [], [], []
            for batch in scan_theorems(enumerate_connected_labeled(n), workers, reverse):
                t3.append(batch[0])
                p2.append(batch[1])
                if len(batch) > 2:
                    p4.append(batch[2])
            rows.append(_aggregate(f"theorem3[n={n}]", t3))
            rows.append(_aggregate(f"prop2[n={n}]", p2))
            rows.append(_aggregate(f"prop4[n={n}]", p4))
    if suite in ("paper", "trees", "all"):
        for n in range(3, min(max_n, 8) + 1):
            rows.append(_aggregate(f"trees[n={n}]", (verify_tree(T) for T in enumerate_trees(n))))
    if suite in ("paper", "products", "all"):
        # factors of 6 vertices are needed to reach every product of <= 12 vertices
        cap = max(2, min(max_n, 6))
        name = "cor5a[products<=12]" if cap == 6 else f"cor5a[products<=12,factors<={cap}]"
        pairs = product_factor_pairs(12, cap)
        rows.append(_aggregate(name, (verify_cor5a(G, H) for G, H in pairs)))
    return rows


def cmd_verify(args) -> int:
    rows = run_suite(args.suite, args.max_n, args.workers, args.reverse_order, not args.fast)
    _emit(rows, args.format)
    return EXIT_OK if all(r["holds"] for r in rows) else EXIT_FALSIFIED


def _scan_graphs(args) -> Iterable[Graph]:
    if args.graph6 is not None or args.edges is not None or args.family is not None:
        return [G for G in _graphs(args) if is_connected(G) and G.n >= 2]
    if args.max_n is None:
        raise UsageError("scan needs --max-n or a graph input")
    return _connected_upto(args.max_n)


def cmd_scan(args) -> int:
    graphs = _scan_graphs(args)
    if args.problem == "3":
        results = scan_problem3(graphs, args.workers)
        if not args.summary_only:
            _emit((r.to_dict() for r in results), args.format)
        _emit([{"summary": "problem3", **problem3_summary(results)}], args.format)
    elif args.problem == "1":
        hist = scan_problem1(graphs, args.workers)
        _emit(({"gamma_c": gc, **row} for gc, row in hist.items()), args.format)
    else:
        rows = []
        for batch in scan_theorems(graphs, args.workers, args.reverse_order):
            for r in batch:
                rows.append(r)
                if not args.summary_only:
                    _emit([r.to_dict()], args.format)
        bad = [r for r in rows if not r.holds]
        _emit([{"summary": "theorems", "checked": len(rows), "failed": len(bad)}], args.format)
        return EXIT_FALSIFIED if bad else EXIT_OK
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="domgame", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    def inputs(p, required=True):
        p.add_argument("--family", help="family name or expression, e.g. D15, G_r, 'direct(paw,complete(2))'")
        p.add_argument("--r", type=int, help="parameter r for --family G_r")
        p.add_argument("--k", type=int, help="parameter k for --family F")
        p.add_argument("--graph6", metavar="FILE", help="file with one graph6 string per line")
        p.add_argument("--edges", metavar="FILE", help="edge-list file: 'n m' then m lines 'u v'")

    def fmt(p, default="json"):
        p.add_argument("--format", choices=("json", "tsv", "human"), default=default)

    def game_opts(p):
        p.add_argument("--variant", choices=("connected", "total"), default="connected")
        p.add_argument("--starter", choices=("d", "s"), default="d")

    def order_opt(p):
        p.add_argument("--reverse-order", action="store_true",
                       help="iterate moves in decreasing vertex order (values must not change)")

    p = sub.add_parser("compute", help="game value for one variant and starter")
    inputs(p); game_opts(p); fmt(p); order_opt(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("classify", help="gamma_cg, gamma_tcg and the class")
    inputs(p); fmt(p); order_opt(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("per-vertex", help="value after a forced first move at each vertex")
    inputs(p); game_opts(p); fmt(p); order_opt(p)
    p.set_defaults(func=cmd_per_vertex)

    p = sub.add_parser("family", help="print a graph")
    inputs(p); fmt(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=("paper", "theorems", "trees", "products", "all"), default="paper")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--fast", action="store_true", help="skip the 20-vertex regression instance")
    fmt(p); order_opt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="scan a graph stream: theorem checks, gamma_tcg range histogram (1), Staller-start comparison (3)")
    inputs(p)
    p.add_argument("--problem", choices=("theorems", "1", "3"), default="theorems")
    p.add_argument("--max-n", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--summary-only", action="store_true")
    fmt(p); order_opt(p)
    p.set_defaults(func=cmd_scan)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if getattr(args, "max_n", None) is not None and not 1 <= args.max_n <= MAX_ENUM_N:
        print(f"domgame: --max-n must be in 1..{MAX_ENUM_N}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, GraphError, OSError, ValueError) as exc:
        print(f"domgame: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
