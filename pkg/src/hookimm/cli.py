"""Command-line interface: ``hookimm {poly,imm,verify,cycles,chars,bench}``.

Exit codes: 0 success, 1 usage error, 2 input parse error, 3 verification
failure, 4 size limit exceeded.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import time
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import Poly, format_rational, to_rational
from .errors import GraphFormatError, SizeLimitError
from .graphs import (
    Digraph,
    Graph,
    MatrixParams,
    build_H,
    cycles_through_edge,
    cycles_through_vertex,
    dicycles_through_arc,
    dicycles_through_vertex,
    parse_graph,
    parse_graph6,
)
from .oracle import hook_polys_bruteforce, immanants_bruteforce
from .recursion import EvalContext, dk_edge, dk_general, dk_vertex, phi_edge, phi_general, phi_vertex
from .symgroup import MAX_PERMUTATION_ORDER, hook_character_table
from .verify import DEFAULT_SEED, SUITE_LIMITS, SUITES

EXIT_USAGE, EXIT_PARSE, EXIT_VERIFY, EXIT_SIZE = 1, 2, 3, 4
AUTO_RECURSION_FROM = 7


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


# ---------------------------------------------------------------------------
# input handling


def load_graph(args) -> Graph | Digraph:
    if args.graph6 is not None:
        if args.directed:
            raise UsageError("graph6 input is undirected; drop --directed")
        return parse_graph6(args.graph6)
    if args.edges is None:
        raise UsageError("give --edges PATH or --graph6 STRING")
    if args.edges == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.edges) as fh:
                text = fh.read()
        except OSError as exc:
            raise GraphFormatError(f"cannot read {args.edges}: {exc}") from None
    return parse_graph(text, directed=True if args.directed else None)


def resolve_params(args) -> MatrixParams:
    explicit = args.beta is not None or args.gamma is not None
    if explicit and args.matrix is not None:
        raise UsageError("give either --matrix or --beta/--gamma, not both")
    if explicit:
        if args.beta is None or args.gamma is None:
            raise UsageError("--beta and --gamma must be given together")
        try:
            return MatrixParams(to_rational(args.beta), to_rational(args.gamma))
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad rational: {exc}") from None
    if args.matrix is None:
        raise UsageError("give --matrix or --beta/--gamma")
    if args.alpha is not None and args.matrix != "a_alpha":
        raise UsageError("--alpha only applies to --matrix a_alpha")
    try:
        return MatrixParams.preset(args.matrix, args.alpha)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from None


def _parse_pair(text: str, n: int) -> tuple:
    try:
        a, b = (int(x) for x in text.replace("-", ",").split(","))
    except ValueError:
        raise UsageError(f"expected 'u,v', got {text!r}") from None
    if not (1 <= a <= n and 1 <= b <= n):
        raise UsageError(f"vertex out of range in {text!r}")
    return a - 1, b - 1


def resolve_ks(text: str, n: int) -> list:
    if text == "all":
        return list(range(1, n + 1))
    try:
        return [int(text)]
    except ValueError:
        raise UsageError(f"--k must be an integer or 'all', got {text!r}") from None


def resolve_method(args, g) -> str:
    method = args.method
    if args.pivot is not None and method != "vertex":
        raise UsageError("--pivot requires --method vertex")
    if args.pivot_edge is not None and method != "edge":
        raise UsageError("--pivot-edge requires --method edge")
    if method == "auto":
        method = "general" if g.n >= AUTO_RECURSION_FROM else "oracle"
    if method == "oracle" and g.n > MAX_PERMUTATION_ORDER:
        raise SizeLimitError(f"order {g.n} exceeds the oracle limit {MAX_PERMUTATION_ORDER}")
    return method


def _edge_choice(args, g) -> tuple:
    edges = g.sorted_arcs() if isinstance(g, Digraph) else g.sorted_edges()
    if args.pivot_edge is None:
        if not edges:
            raise UsageError("the edge method needs a graph with at least one edge")
        return edges[0]
    e = _parse_pair(args.pivot_edge, g.n)
    if isinstance(g, Graph):
        e = (min(e), max(e))
    if e not in edges:
        raise UsageError(f"{args.pivot_edge} is not an edge of the input")
    return e


def _pivot_choice(args, g) -> int:
    v = 1 if args.pivot is None else args.pivot
    if not 1 <= v <= g.n:
        raise UsageError(f"pivot {v} out of range 1..{g.n}")
    return v - 1


def compute(args, want: str) -> tuple:
    """Return (graph, params, method, {k: value}) for the ``poly``/``imm`` commands."""
    g = load_graph(args)
    params = resolve_params(args)
    ks = resolve_ks(args.k, g.n)
    method = resolve_method(args, g)
    out = {}
    if method == "oracle":
        H = build_H(g, params)
        table = hook_polys_bruteforce(H) if want == "poly" else immanants_bruteforce(H)
        for k in ks:
            out[k] = table.get(k, Poly() if want == "poly" else Fraction(0))
        return g, params, method, out
    ctx = EvalContext(g, params)
    if method == "vertex":
        v = _pivot_choice(args, g)
        fn = (lambda k: phi_vertex(ctx, v, k)) if want == "poly" else (lambda k: dk_vertex(ctx, v, k))
    elif method == "edge":
        e = _edge_choice(args, g)
        fn = (lambda k: phi_edge(ctx, e, k)) if want == "poly" else (lambda k: dk_edge(ctx, e, k))
    else:
        fn = (lambda k: phi_general(ctx, (), k)) if want == "poly" else (lambda k: dk_general(ctx, (), k))
    for k in ks:
        if not 1 <= k <= g.n:
            out[k] = Poly() if want == "poly" else Fraction(0)
        else:
            out[k] = fn(k)
    return g, params, method, out


def _warn_range(ks, n) -> None:
    for k in ks:
        if not 1 <= k <= n:
            print(f"warning: k={k} is outside 1..{n}; the hook immanant is zero by convention",
                  file=sys.stderr)


# ---------------------------------------------------------------------------
# commands


def cmd_poly(args) -> int:
    g, params, method, res = compute(args, "poly")
    _warn_range(res, g.n)
    if args.format == "json":
        for k, p in res.items():
            print(json.dumps({"n": g.n, "k": k, "beta": format_rational(params.beta),
                              "gamma": format_rational(params.gamma), "method": method,
                              "coeffs": p.to_json()}))
    elif args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["k", "power", "coeff"])
        for k, p in res.items():
            for i, c in enumerate(p.coeffs):
                w.writerow([k, i, format_rational(c)])
    else:
        for k, p in res.items():
            print(f"Phi_{k}(x) = {p}")
    return 0


def cmd_imm(args) -> int:
    g, params, method, res = compute(args, "imm")
    _warn_range(res, g.n)
    if args.format == "json":
        for k, d in res.items():
            print(json.dumps({"n": g.n, "k": k, "beta": format_rational(params.beta),
                              "gamma": format_rational(params.gamma), "method": method,
                              "value": format_rational(d)}))
    elif args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["k", "value"])
        for k, d in res.items():
            w.writerow([k, format_rational(d)])
    else:
        if len(res) == 1:
            print(format_rational(next(iter(res.values()))))
        else:
            for k, d in res.items():
                print(f"d_{k} = {format_rational(d)}")
    return 0


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        limit = SUITE_LIMITS[name]
        if args.n > limit:
            raise SizeLimitError(f"suite {name} accepts --n up to {limit}")
        started = time.perf_counter()
        report = SUITES[name](args.n, args.seed)
        elapsed = time.perf_counter() - started
        print(f"{report.summary()} [{elapsed:.1f}s]")
        for note in report.notes:
            print(f"  note: {note}")
        ok = ok and report.passed
    return 0 if ok else EXIT_VERIFY


def cmd_cycles(args) -> int:
    g = load_graph(args)
    if (args.vertex is None) == (args.edge is None):
        raise UsageError("give exactly one of --vertex or --edge")
    if args.vertex is not None:
        if not 1 <= args.vertex <= g.n:
            raise UsageError(f"vertex {args.vertex} out of range 1..{g.n}")
        v = args.vertex - 1
        recs = dicycles_through_vertex(g, v) if isinstance(g, Digraph) else cycles_through_vertex(g, v)
    else:
        e = _parse_pair(args.edge, g.n)
        try:
            recs = (dicycles_through_arc(g, e) if isinstance(g, Digraph)
                    else cycles_through_edge(g, e))
        except KeyError:
            raise UsageError(f"{args.edge} is not an edge of the input") from None
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["length", "vertices"])
    for c in recs:
        w.writerow([c.length, " ".join(str(v + 1) for v in c.walk)])
    return 0


def cmd_chars(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be positive")
    if args.n > 20:
        raise SizeLimitError("character tables are limited to n <= 20")
    cols, rows = hook_character_table(args.n)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["k"] + ["+".join(map(str, ct)) for ct in cols])
    for k, row in enumerate(rows, start=1):
        w.writerow([k] + row)
    return 0


def cmd_bench(args) -> int:
    import random

    from .families import complete_graph, cycle_graph, path_graph, random_graph

    rng = random.Random(args.seed)
    family = {"path": path_graph, "cycle": cycle_graph, "complete": complete_graph,
              "random": lambda n: random_graph(n, rng)}[args.family]
    if args.max_n > MAX_PERMUTATION_ORDER:
        raise SizeLimitError(f"bench is limited to n <= {MAX_PERMUTATION_ORDER}")
    params = MatrixParams.laplacian()
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["n", "method", "milliseconds"])
    for n in range(args.min_n, args.max_n + 1):
        g = family(n)
        k = math.ceil(n / 2)
        t0 = time.perf_counter()
        a = hook_polys_bruteforce(build_H(g, params))[k]
        t1 = time.perf_counter()
        b = phi_general(EvalContext(g, params), (), k)
        t2 = time.perf_counter()
        if a != b:
            print(f"mismatch at n={n}", file=sys.stderr)
            return EXIT_VERIFY
        w.writerow([n, "oracle", f"{(t1 - t0) * 1000:.3f}"])
        w.writerow([n, "recursion", f"{(t2 - t1) * 1000:.3f}"])
        sys.stdout.flush()
    return 0


# ---------------------------------------------------------------------------


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--edges", metavar="PATH", help="edge-list file ('-' for stdin)")
    src.add_argument("--graph6", metavar="STRING", help="undirected graph in graph6")
    p.add_argument("--directed", action="store_true", help="read the edge list as arcs")


def _add_compute(p: argparse.ArgumentParser) -> None:
    _add_input(p)
    p.add_argument("--matrix", choices=["laplacian", "signless", "adjacency", "a_alpha"])
    p.add_argument("--alpha", help="rational alpha in [0, 1] for a_alpha")
    p.add_argument("--beta", help="explicit beta (rational)")
    p.add_argument("--gamma", help="explicit gamma (rational)")
    p.add_argument("--k", default="all", help="hook index or 'all' (default)")
    p.add_argument("--method", choices=["oracle", "vertex", "edge", "general", "auto"],
                   default="auto")
    p.add_argument("--pivot", type=int, help="1-based pivot vertex for --method vertex")
    p.add_argument("--pivot-edge", help="1-based 'u,v' for --method edge")
    p.add_argument("--format", choices=["human", "json", "csv"], default="human")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hookimm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("poly", help="hook immanantal polynomials Phi_k(H, x)")
    _add_compute(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("imm", help="hook immanants d_k(H)")
    _add_compute(p)
    p.set_defaults(func=cmd_imm)

    p = sub.add_parser("verify", help="run a property suite against the oracle")
    p.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    p.add_argument("--n", type=int, default=5, help="size bound")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cycles", help="list simple cycles through a vertex or edge (CSV)")
    _add_input(p)
    p.add_argument("--vertex", type=int)
    p.add_argument("--edge", help="1-based 'u,v' (an arc tail,head for digraphs)")
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("chars", help="hook character table of S_n (CSV)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_chars)

    p = sub.add_parser("bench", help="time the oracle against the memoised recursion")
    p.add_argument("--family", choices=["path", "cycle", "complete", "random"], default="complete")
    p.add_argument("--min-n", type=int, default=2)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hookimm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphFormatError as exc:
        print(f"hookimm: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SizeLimitError as exc:
        print(f"hookimm: size limit: {exc}", file=sys.stderr)
        return EXIT_SIZE


if __name__ == "__main__":
    sys.exit(main())
