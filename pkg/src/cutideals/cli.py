"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 bad input,
3 a computation ran out of budget.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import corpus
from .cuts import cut_exponent_matrix, cut_set, enumerate_partitions, format_matrix, phylo_exponent_matrix
from .errors import BudgetExceeded, InputError
from .graph import Graph, block_decompose, is_ring_graph, parse_graph
from .hilbert import (default_window, degree_from_series, format_report, h_vector_symmetric,
                      hilbert_series_from_initial, is_hilbertian, regularity)
from .toric.binomials import Budget, format_gb
from .toric.ideal import (candidate_orders, is_squarefree_quadratic, minimal_generator_degrees,
                          order_search, toric_ideal)
from .toric.orders import parse_order
from . import verify

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
CUT_TABLE_LIMIT = 1 << 14  # rows printed by `cuts`


def read_graph(source: str) -> Graph:
    """A graph file path, or the name of a built-in graph."""
    path = Path(source)
    if path.is_file():
        try:
            return parse_graph(path.read_text())
        except InputError as exc:
            raise InputError(f"{source}: {exc}") from None
    if source in corpus.names():
        return corpus.load(source)
    raise InputError(f"{source}: no such file or built-in graph")


def _budget(args) -> Budget:
    return Budget(max_degree=args.max_degree, time_limit=args.time_limit)


def _emit(text: str, args, filename: str):
    sys.stdout.write(text)
    if getattr(args, "out", None):
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / filename).write_text(text)


def _resolve_order(args, matrix):
    n = len(matrix.columns)
    perm = None
    if args.perm:
        named = {name.split("/", 1)[1]: o.perm for name, o in candidate_orders(matrix) if name.startswith("lex/")}
        if args.perm in named:
            perm = named[args.perm]
        else:
            index = {c: i for i, c in enumerate(matrix.columns)}
            try:
                perm = [index[t] if t in index else int(t) for t in args.perm.split(",")]
            except ValueError:
                raise InputError(f"bad --perm {args.perm!r}: use a name ({', '.join(named)}) "
                                 "or a comma-separated list of indices or labels") from None
    try:
        return parse_order(args.order, n, perm)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_cuts(args) -> int:
    g = read_graph(args.graph)
    if g.vertex_count < 1:
        raise InputError("graph has no vertices")
    if 1 << (g.vertex_count - 1) > CUT_TABLE_LIMIT:
        raise BudgetExceeded(f"{2 ** (g.vertex_count - 1)} partitions exceed the table limit of {CUT_TABLE_LIMIT}")
    lines = [f"# partitions: {2 ** (g.vertex_count - 1)}"]
    for p in enumerate_partitions(g):
        cut = cut_set(p, g)
        edges = " ".join(f"{g.edges[k - 1][0]}-{g.edges[k - 1][1]}" for k in cut.edges())
        side_b = ",".join(map(str, p.side_b)) or "-"
        lines.append(f"{p.label}  B={side_b}  size={len(cut)}  cut={edges or '-'}")
    _emit("\n".join(lines) + "\n", args, "cuts.txt")
    return EXIT_OK


def cmd_matrix(args) -> int:
    if args.claw:
        m = phylo_exponent_matrix(args.claw)
    else:
        m = cut_exponent_matrix(read_graph(args.graph))
    _emit(format_matrix(m), args, "matrix.txt")
    return EXIT_OK


def cmd_ideal(args) -> int:
    g = read_graph(args.graph)
    m = cut_exponent_matrix(g)
    budget = _budget(args)
    if args.perm == "search":
        result = order_search(m, budget)
        if not result.found:
            best = result.best
            sys.stderr.write(f"no squarefree quadratic order found; best {best.name} "
                             f"(max degree {best.max_degree})\n")
            return EXIT_FAIL
        gb = result.gb
    else:
        gb = toric_ideal(m, _resolve_order(args, m), budget)
    shape = is_squarefree_quadratic(gb)
    mu = minimal_generator_degrees(m, budget)
    stats = format_report([
        ("elements", len(gb)),
        ("max_degree", gb.max_degree),
        ("minimal_generators", ",".join(f"{k}:{v}" for k, v in sorted(mu.items())) or "none"),
        ("squarefree", shape.squarefree),
        ("quadratic", shape.quadratic),
        ("initial_squarefree", shape.initial_squarefree),
        ("koszul_by_quadratic_gb", shape.koszul_by_quadratic_gb),
    ])
    _emit(format_gb(gb, m.columns), args, "ideal.gb")
    sys.stdout.write(stats)
    if args.out:
        (Path(args.out) / "ideal.stats").write_text(stats)
    return EXIT_OK


def cmd_series(args) -> int:
    g = read_graph(args.graph)
    m = cut_exponent_matrix(g)
    gb = toric_ideal(m, budget=_budget(args))
    ser = hilbert_series_from_initial(gb.leads, len(m.columns))
    window = args.window or default_window(ser)
    reg = regularity(ser, g.edge_count)
    text = format_report([
        ("h_vector", ser.numerator),
        ("dimension", ser.denominator_power),
        ("degree", degree_from_series(ser)),
        ("reg_variety", reg.reg_variety),
        ("reg_bound_e_plus_1", reg.bound_e_plus_1),
        ("within_bound", reg.within_bound),
        ("window", window),
        ("hilbertian", is_hilbertian(m, ser, window)),
        ("symmetric", h_vector_symmetric(ser)),
        ("symmetric_means", "h-vector symmetric (Gorenstein for CM domains)"),
    ])
    _emit(text, args, "series.txt")
    return EXIT_OK


def cmd_recognize(args) -> int:
    g = read_graph(args.graph)
    verdict = is_ring_graph(g)
    dec = block_decompose(g)
    lines = [f"ring_graph = {str(verdict.is_ring).lower()}",
             f"cutvertices = {','.join(map(str, sorted(dec.cutvertices))) or '-'}",
             f"bridges = {','.join(map(str, sorted(dec.bridge_edges))) or '-'}"]
    for ev in verdict.per_block:
        verts = ",".join(map(str, dec.blocks[ev.block].vertices))
        lines.append(f"block {ev.block + 1}: vertices {verts}; primitive cycles {ev.primitive_cycle_count}; "
                     f"cycle rank {ev.cycle_rank}")
    _emit("\n".join(lines) + "\n", args, "recognize.txt")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        suites = verify.expand(args.suite)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    config = verify.RunConfig(max_degree=args.max_degree, time_limit=args.time_limit,
                              window=args.window, out=Path(args.out) if args.out else None)
    session = verify.run(suites, config)
    sys.stdout.write(session.report())
    if config.out:
        session.write(config.out)
    return EXIT_FAIL if session.failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cutideals", description="Cut ideals of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph=True):
        if graph:
            p.add_argument("graph", help="graph file, or a built-in name such as C5")
        p.add_argument("--order", default="degrevlex", help="lex, degrevlex or elim:k")
        p.add_argument("--perm", default=None,
                       help="variable ranking: bitstring, cut-size, their -reversed forms, "
                            "search, or a comma-separated list")
        p.add_argument("--max-degree", type=_positive_int, default=6)
        p.add_argument("--time-limit", type=_nonnegative_float, default=0.0, help="seconds; 0 for none")
        p.add_argument("--window", type=_positive_int, default=None)
        p.add_argument("--out", default=None, help="directory for output files")

    p = sub.add_parser("cuts", help="partitions and their cut edges")
    common(p)
    p.set_defaults(func=cmd_cuts)
    p = sub.add_parser("matrix", help="exponent matrix of the cut map")
    p.add_argument("graph", nargs="?", default=None)
    p.add_argument("--claw", type=_positive_int, default=None, help="claw tree with this many leaves instead")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_matrix)
    p = sub.add_parser("ideal", help="reduced Groebner basis of the cut ideal")
    common(p)
    p.set_defaults(func=cmd_ideal)
    p = sub.add_parser("series", help="Hilbert series report")
    common(p)
    p.set_defaults(func=cmd_series)
    p = sub.add_parser("recognize", help="ring-graph verdict with per-block evidence")
    common(p)
    p.set_defaults(func=cmd_recognize)
    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help="formulas, cycles, trees, unions, ring or all")
    common(p, graph=False)
    p.set_defaults(func=cmd_verify)
    return parser


def _positive_int(text):
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _nonnegative_float(text):
    v = float(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "matrix" and not (args.graph or args.claw):
        parser.error("matrix needs a graph or --claw")
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return EXIT_INPUT
    except BudgetExceeded as exc:
        sys.stderr.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
