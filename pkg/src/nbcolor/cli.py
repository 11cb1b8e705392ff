"""Command-line interface.

Exit codes follow one contract everywhere: 0 for success, 1 for a
mathematical negative (a refusal, an unsatisfiable instance, an unbalanced
coloring) with a machine-readable first line such as ``REFUSED <rule>`` or
``UNSAT``, and 2 for usage or input-format errors.  Shell harnesses can
therefore assert theorems directly on exit codes.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import families, io, products, reduction, unions
from .balance import Coloring, Refusal, check_necessary, is_closed_nbkc, is_nbkc
from .cnf import to_cnf
from .graph import Graph
from .solver import SolveConfig, solve


def _read_graph(path: str) -> Graph:
    return io.graph_from_text(Path(path).read_text())


def _read_coloring(path: str) -> Coloring:
    return io.coloring_from_text(Path(path).read_text())


def _write(path: str, text: str) -> None:
    Path(path).write_text(text)


def _emit_pair(prefix: str | None, g: Graph, c: Coloring | None) -> None:
    """Write PREFIX.graph / PREFIX.coloring, or dump both to stdout."""
    if prefix:
        _write(f"{prefix}.graph", io.graph_to_text(g))
        if c is not None:
            _write(f"{prefix}.coloring", io.coloring_to_text(c))
        print(f"wrote {prefix}.graph" + (f" and {prefix}.coloring" if c else ""))
    else:
        sys.stdout.write(io.graph_to_text(g))
        if c is not None:
            sys.stdout.write(io.coloring_to_text(c))


def _refuse(refusal: Refusal) -> int:
    print(f"REFUSED {refusal.rule}")
    print(refusal.detail)
    return 1


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part != "")
    except ValueError:
        raise SystemExit(f"error: {what} must be comma-separated integers: {text!r}")


def _cmd_construct(args: argparse.Namespace) -> int:
    family = args.family
    params = args.params
    k = args.k

    def need(count: int, usage: str) -> None:
        if len(params) != count:
            raise SystemExit(f"error: construct {family} expects {usage}")

    result: tuple | Refusal
    if family == "cycle":
        need(1, "one parameter: the cycle length")
        if k not in (None, 2):
            raise SystemExit("error: cycle colorings use k=2")
        result = families.cycle_nbc(int(params[0]))
    elif family == "circulant":
        need(2, "two parameters: n and the comma-separated connections")
        n = int(params[0])
        conns = _parse_int_list(params[1], "connections")
        spec = families.CirculantSpec(n, conns)
        if k is None or k == spec.arity:
            result = families.circulant_progression_nbc(spec)
        else:
            result = families.circulant_residue_nbc(spec, k)
    elif family == "hamming":
        need(1, "one parameter: the word length d (the alphabet size is -k)")
        if k is None:
            raise SystemExit("error: construct hamming requires -k")
        res = families.hamming_nbc(int(params[0]), k)
        result = res if isinstance(res, Refusal) else res[:2]
    elif family == "hypercube":
        need(1, "one parameter: the dimension d")
        if k not in (None, 2):
            raise SystemExit("error: hypercube colorings use k=2")
        res = families.hypercube_nbc(int(params[0]))
        result = res if isinstance(res, Refusal) else res[:2]
    elif family == "multipartite":
        need(1, "one parameter: comma-separated part sizes")
        if k is None:
            raise SystemExit("error: construct multipartite requires -k")
        result = families.complete_multipartite_nbc(
            _parse_int_list(params[0], "part sizes"), k
        )
    elif family == "complete":
        need(1, "one parameter: the vertex count")
        if k is None:
            raise SystemExit("error: construct complete requires -k")
        result = families.complete_graph_nbc(int(params[0]), k)
    else:
        raise SystemExit(
            f"error: unknown family {family!r}; choose from cycle, circulant, "
            f"hamming, hypercube, multipartite, complete"
        )

    if isinstance(result, Refusal):
        return _refuse(result)
    g, c = result
    _emit_pair(args.output, g, c)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    c = _read_coloring(args.coloring)
    report = is_closed_nbkc(g, c) if args.closed else is_nbkc(g, c)
    if args.format == "json":
        print(io.report_to_json(report))
        return 0 if report.balanced else 1
    if report.balanced:
        print("BALANCED")
        print(f"class sizes: {list(report.class_sizes)}")
        return 0
    print("UNBALANCED")
    for v, counts in report.violations[:10]:
        print(f"vertex {v} sees per-color counts {list(counts)}")
    if len(report.violations) > 10:
        print(f"... and {len(report.violations) - 10} more violations")
    if report.unused_colors:
        print(f"unused colors: {list(report.unused_colors)}")
    return 1


def _cmd_analyze(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    report = check_necessary(g, args.k)
    if args.format == "json":
        print(io.report_to_json(report))
        return 0 if report.possibly_colorable else 1
    if report.possibly_colorable:
        print("possibly-colorable")
        if report.regularity:
            r = report.regularity
            print(
                f"{r.degree}-regular: n mod k = {r.order_residue}, "
                f"|E| mod k^2 = {r.size_residue}"
            )
        return 0
    print(f"REFUSED {report.failed_rule}")
    if report.failed_rule == "degree-divisibility":
        v = report.degree_offender
        print(f"vertex {v} has degree {g.degree(v)}, not a multiple of {args.k}")
    elif report.failed_rule == "min-order":
        print(report.order_detail)
    elif report.regularity is not None:
        r = report.regularity
        print(
            f"{r.degree}-regular graph: n mod k = {r.order_residue}, "
            f"|E| mod k^2 = {r.size_residue}"
        )
    return 1


def _cmd_solve(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    cfg = SolveConfig(
        mode=args.mode,
        node_budget=args.budget,
        parallel=args.jobs > 1,
    )
    outcome = solve(g, args.k, cfg)
    if args.format == "json":
        print(io.report_to_json(outcome))
        return 0 if outcome.status == "SAT" else 1
    if outcome.status == "SAT":
        print("SAT")
        if outcome.count is not None:
            print(f"colorings: {outcome.count}")
        if outcome.witness is not None:
            if args.output:
                _write(args.output, io.coloring_to_text(outcome.witness))
                print(f"wrote {args.output}")
            else:
                sys.stdout.write(io.coloring_to_text(outcome.witness))
        return 0
    if outcome.status == "UNSAT":
        print("UNSAT")
        if outcome.count is not None:
            print("colorings: 0")
        return 1
    print("BUDGET-EXCEEDED")
    print(f"explored {outcome.nodes_explored} nodes")
    return 1


def _cmd_product(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    h = _read_graph(args.other)
    if args.cg is None and args.ch is None:
        prod = products.product_graph(args.kind, g, h)
        _emit_pair(args.output, prod, None)
        return 0
    cg = _read_coloring(args.cg) if args.cg else None
    ch = _read_coloring(args.ch) if args.ch else None
    result = products.product_nbc(args.kind, g, h, cg, ch)
    if isinstance(result, Refusal):
        return _refuse(result)
    prod, coloring, _ = result
    _emit_pair(args.output, prod, coloring)
    return 0


def _cmd_join(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    cg = _read_coloring(args.g_coloring)
    h = _read_graph(args.other)
    ch = _read_coloring(args.h_coloring)
    result = products.join_nbc(g, cg, h, ch)
    if isinstance(result, Refusal):
        return _refuse(result)
    joined, coloring = result
    _emit_pair(args.output, joined, coloring)
    return 0


def _cmd_embed(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    host, coloring, embedding = products.embed_in_nbkc(g, args.k)
    _emit_pair(args.output, host, coloring)
    print("embedding: " + ",".join(str(v) for v in embedding))
    return 0


def _cmd_vertex_add(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    c = _read_coloring(args.coloring)
    u_list, v_list = [], []
    for chunk in args.pairs.split(","):
        parts = chunk.split(":")
        if len(parts) != 2:
            raise SystemExit(
                f"error: --pairs expects u:v pairs separated by commas, got "
                f"{chunk!r}"
            )
        u_list.append(int(parts[0]))
        v_list.append(int(parts[1]))
    result = products.vertex_addition(g, c, tuple(u_list), tuple(v_list))
    if isinstance(result, Refusal):
        return _refuse(result)
    grown, coloring = result
    _emit_pair(args.output, grown, coloring)
    return 0


def _cmd_union(args: argparse.Namespace) -> int:
    glue = frozenset(_parse_int_list(args.set, "--set"))
    if args.cycle is not None:
        if args.copies is None:
            raise SystemExit("error: union --cycle requires --copies")
        result = unions.cycle_union_nbc(args.cycle, glue, args.copies)
        if isinstance(result, Refusal):
            return _refuse(result)
        g, c = result
        _emit_pair(args.output, g, c)
        return 0
    if args.graph is None:
        raise SystemExit("error: union needs a graph file unless --cycle is given")
    g = _read_graph(args.graph)
    if args.congruence:
        if args.k is None:
            raise SystemExit("error: union --congruence requires -k")
        report = unions.union_congruence(g, glue, args.k)
        if args.format == "json":
            print(io.report_to_json(report))
        else:
            print(
                f"q={list(report.q)} p={report.p} L={report.L} M={report.M} "
                f"modulus={report.modulus}"
            )
            print(f"admissible copy counts: n ≡ 1 (mod {report.modulus})")
        return 0
    if args.copies is None:
        raise SystemExit("error: union requires --copies")
    spec = unions.UnionSpec(g, glue, args.copies)
    union, _maps = unions.union_over_set(spec)
    coloring = None
    if args.coloring_file:
        base_coloring = _read_coloring(args.coloring_file)
        inside = [(u, v) for u, v in g.edges if u in glue and v in glue]
        if inside:
            print("REFUSED dependent-set")
            print(
                f"edge {inside[0]} lies inside the glue set; the copied "
                f"coloring theorem needs an independent set (try --congruence "
                f"or solve)"
            )
            return 1
        coloring = unions.union_nbc_independent(g, base_coloring, glue, args.copies)
    _emit_pair(args.output, union, coloring)
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    values = _parse_int_list(args.ess, "--ess")
    inst = reduction.EssInstance(values=values, k=args.k)
    rinst = reduction.reduce_ess_to_nbc(inst)
    graph_path = args.output
    roles_path = args.roles or str(Path(graph_path).with_suffix(".roles"))
    _write(graph_path, io.graph_to_text(
        rinst.graph,
        comments=(
            f"compiled equal-sum-subsets instance: T={list(values)}, k={args.k}",
        ),
    ))
    _write(roles_path, io.roles_to_text(rinst.roles()))
    print(f"wrote {graph_path} and {roles_path}")
    print(f"vertices: {rinst.graph.n}, edges: {rinst.graph.m}")
    return 0


def _cmd_decode(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    c = _read_coloring(args.coloring)
    roles_path = args.roles or str(Path(args.graph).with_suffix(".roles"))
    roles = io.roles_from_text(Path(roles_path).read_text())
    report = is_nbkc(g, c)
    if not report.balanced:
        print("UNBALANCED")
        print(f"{len(report.violations)} vertices violate balance")
        return 1
    partition = reduction.decode_from_roles(g, roles, c)
    share = sum(partition[0])
    print(f"equal subset sums: {share}")
    for i, part in enumerate(partition, start=1):
        print(f"T_{i} = {sorted(part)}")
    return 0


def _cmd_export_dot(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    c = _read_coloring(args.coloring) if args.coloring else None
    roles = (
        io.roles_from_text(Path(args.roles).read_text()) if args.roles else None
    )
    text = io.to_dot(g, c, roles)
    if args.output:
        _write(args.output, text)
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_export_cnf(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    doc = to_cnf(g, args.k)
    text = doc.to_dimacs()
    if args.output:
        _write(args.output, text)
        print(f"wrote {args.output} ({doc.num_vars} vars, {len(doc.clauses)} clauses)")
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------
# Parser assembly
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nbcolor",
        description=(
            "Neighborhood-balanced k-colorings: constructions, verification, "
            "exact solving, and hardness reductions."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="generate a family graph and coloring")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("-k", type=int, default=None)
    p.add_argument("-o", "--output", default=None, metavar="PREFIX")
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("verify", help="check a coloring for balance")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--closed", action="store_true",
                   help="use closed neighborhoods N[v]")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("analyze", help="run the arithmetic necessity screens")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("solve", help="decide balanced k-colorability exactly")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--mode", choices=("first-witness", "canonical-min", "count"),
                   default="first-witness")
    p.add_argument("--budget", type=int, default=None,
                   help="search-node cap (forces single-threaded search)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--output", default=None, metavar="FILE")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("product", help="build a graph product, optionally colored")
    p.add_argument("kind", choices=("cartesian", "direct", "strong", "lexicographic"))
    p.add_argument("graph")
    p.add_argument("other")
    p.add_argument("--cg", default=None, help="coloring of the first factor")
    p.add_argument("--ch", default=None, help="coloring of the second factor")
    p.add_argument("-o", "--output", default=None, metavar="PREFIX")
    p.set_defaults(handler=_cmd_product)

    p = sub.add_parser("join", help="join two balanced-colored graphs")
    p.add_argument("graph")
    p.add_argument("g_coloring")
    p.add_argument("other")
    p.add_argument("h_coloring")
    p.add_argument("-o", "--output", default=None, metavar="PREFIX")
    p.set_defaults(handler=_cmd_join)

    p = sub.add_parser("embed", help="embed a graph in a balanced-colorable host")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-o", "--output", default=None, metavar="PREFIX")
    p.set_defaults(handler=_cmd_embed)

    p = sub.add_parser("vertex-add",
                       help="grow a balanced coloring by one 2k-1 vertex addition")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--pairs", required=True,
                   help="color-matched vertex pairs, e.g. 0:2,1:3")
    p.add_argument("-o", "--output", default=None, metavar="PREFIX")
    p.set_defaults(handler=_cmd_vertex_add)

    p = sub.add_parser("union", help="glue n copies of a graph along a vertex set")
    p.add_argument("graph", nargs="?", default=None)
    p.add_argument("--set", required=True, help="comma-separated glue vertices")
    p.add_argument("--copies", type=int, default=None)
    p.add_argument("--cycle", type=int, default=None, metavar="M",
                   help="use the cycle C_M as the base graph, with the "
                        "characterized coloring")
    p.add_argument("--congruence", action="store_true",
                   help="report the dependent-set congruence instead of building")
    p.add_argument("-k", type=int, default=None)
    p.add_argument("--coloring", dest="coloring_file", default=None,
                   help="balanced base coloring to copy across an "
                        "independent glue set")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-o", "--output", default=None, metavar="PREFIX")
    p.set_defaults(handler=_cmd_union)

    p = sub.add_parser("reduce",
                       help="compile an equal-sum-subsets instance to a graph")
    p.add_argument("--ess", required=True, help="comma-separated multiset, e.g. "
                                                "1,2,2,3,4")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-o", "--output", required=True, metavar="FILE")
    p.add_argument("--roles", default=None,
                   help="role sidecar path (default: output with .roles suffix)")
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser("decode",
                       help="read the equal-sum partition out of a balanced "
                            "coloring of a compiled instance")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--roles", default=None,
                   help="role sidecar path (default: graph with .roles suffix)")
    p.set_defaults(handler=_cmd_decode)

    p = sub.add_parser("export-dot", help="render a graph (and coloring) as DOT")
    p.add_argument("graph")
    p.add_argument("--coloring", default=None)
    p.add_argument("--roles", default=None)
    p.add_argument("-o", "--output", default=None, metavar="FILE")
    p.set_defaults(handler=_cmd_export_dot)

    p = sub.add_parser("export-cnf", help="export the instance as DIMACS CNF")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-o", "--output", default=None, metavar="FILE")
    p.set_defaults(handler=_cmd_export_cnf)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with its own code (2 on usage errors); normalize.
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except io.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: no such file: {exc.filename}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        message = str(exc)
        if message and not isinstance(exc.code, int):
            print(message, file=sys.stderr)
            return 2
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run(sys.argv[1:]))


__all__ = ["run", "main"]
