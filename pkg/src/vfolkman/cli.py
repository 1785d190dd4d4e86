"""vfolkman command line: one graph6 per line in, one result per line out."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Iterator, TextIO

from . import arrowing, canon, cliquelib, folkman, pipeline
from .graphcore import Graph, Graph6Error, graph6_decode, graph6_encode, members

EXIT_OK, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _pattern(text: str) -> arrowing.ArrowPattern:
    try:
        pat = arrowing.parse_pattern(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    if pat.s == 0:
        raise argparse.ArgumentTypeError("pattern needs at least one part >= 2")
    return pat


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _open_input(path: str | None) -> TextIO:
    if path in (None, "-"):
        return sys.stdin
    try:
        return open(path, encoding="ascii", errors="replace")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _graphs(path: str | None) -> Iterator[tuple[str, Graph]]:
    fh = _open_input(path)
    for lineno, line in enumerate(fh, 1):
        text = line.strip()
        if not text:
            continue
        try:
            yield text, graph6_decode(text)
        except Graph6Error as exc:
            raise UsageError(f"line {lineno}: {exc}") from exc


def _write_store(store: canon.GraphStore, out: TextIO) -> None:
    for key in store.keys():
        out.write(key.decode("ascii") + "\n")


# ---------------------------------------------------------------- commands


def cmd_props(args, out: TextIO) -> int:
    for _, g in _graphs(args.input):
        row = [
            g.n, g.edge_count, cliquelib.min_degree(g), cliquelib.max_degree(g),
            cliquelib.clique_number(g), cliquelib.independence_number(g),
            arrowing.chromatic_number(g), canon.automorphism_count(g),
        ]
        out.write(" ".join(map(str, row)) + "\n")
    return EXIT_OK


def cmd_arrows(args, out: TextIO) -> int:
    if args.pattern is None and args.universal is None:
        raise UsageError("give --pattern or --universal M P")
    all_true = True
    for _, g in _graphs(args.input):
        if args.universal is not None:
            m, p = args.universal
            pats = arrowing.universal_partitions(m, p)
        else:
            pats = (args.pattern,)
        if args.brute:
            ok = all(arrowing.arrows_brute(g, pat) for pat in pats)
        else:
            ok = all(arrowing.arrows(g, pat) for pat in pats)
        all_true &= ok
        out.write(("true" if ok else "false") + "\n")
    return EXIT_OK if all_true else EXIT_FALSE


def cmd_canon(args, out: TextIO) -> int:
    for _, g in _graphs(args.input):
        out.write(canon.canonical_form(g).decode("ascii") + "\n")
    return EXIT_OK


def cmd_maxsubsets(args, out: TextIO) -> int:
    for _, g in _graphs(args.input):
        subs = cliquelib.maximal_Kfree_subsets(g, args.t)
        out.write(" ".join("{" + ",".join(map(str, members(s))) + "}" for s in subs) + "\n")
    return EXIT_OK


def cmd_extend(args, out: TextIO) -> int:
    graphs = [g for _, g in _graphs(args.input)]
    t = args.t if args.t is not None else args.r
    if args.from_maximal:
        pat = args.from_maximal
        if pat not in pipeline.decrements(args.pattern):
            raise UsageError(f"{pat} is not the pattern with one part decremented")
        graphs = pipeline.expand_plusK(graphs, args.q, t, pat)
    stats = pipeline.ExtensionStats()
    store = pipeline.extend_general(graphs, args.pattern, args.q, args.r, t,
                                    threads=args.threads, stats=stats)
    _write_store(store, out)
    print(f"extend: {len(store)} graphs", file=sys.stderr)
    return EXIT_OK


def cmd_populate(args, out: TextIO) -> int:
    graphs = [g for _, g in _graphs(args.input)]
    store, rounds = pipeline.populate(graphs, args.pattern, args.q, args.rounds)
    _write_store(store, out)
    print(f"populate: {len(store)} graphs after {rounds} rounds", file=sys.stderr)
    return EXIT_OK


def cmd_filter(args, out: TextIO) -> int:
    errors: list[str] = []
    store = pipeline.filter_catalog(_open_input(args.input), args.pattern, args.q,
                                    lenient=args.lenient, errors=errors)
    for e in errors:
        print(f"skipped {e}", file=sys.stderr)
    _write_store(store, out)
    return EXIT_OK


def cmd_pipeline(args, out: TextIO) -> int:
    cfg_path = Path(args.config)
    if not cfg_path.exists():
        if args.config not in pipeline.shipped_configs():
            raise UsageError(f"config {args.config} not found")
        cfg_path = pipeline.shipped_config(args.config)
    cfg = pipeline.load_config(cfg_path)
    report = pipeline.run_pipeline(cfg, args.out, threads=args.threads)
    out.write(report.table())
    if args.out is not None:
        from .plotting import plot_report

        plot_report(report, Path(args.out) / "report.png")
    return EXIT_OK


def cmd_folkman(args, out: TextIO) -> int:
    params = folkman.FolkmanParams(args.pattern, args.q)
    if not folkman.exists(params):
        out.write(f"{params} does not exist (q must exceed max part {args.pattern.p})\n")
        return EXIT_FALSE
    ledger = folkman.bounds(params)
    out.write("\n".join(ledger.lines(verbose=args.verbose)) + "\n")
    return EXIT_OK


def cmd_encode(args, out: TextIO) -> int:
    """Edge-list lines "n u-v u-v ..." to graph6."""
    for lineno, line in enumerate(_open_input(args.input), 1):
        tok = line.split()
        if not tok:
            continue
        try:
            n = int(tok[0])
            edges = [tuple(int(x) for x in e.split("-")) for e in tok[1:]]
            if any(len(e) != 2 for e in edges):
                raise ValueError("edges are written u-v")
            g = Graph.from_edges(n, edges)
        except ValueError as exc:
            raise UsageError(f"line {lineno}: {exc}") from exc
        out.write(graph6_encode(g).decode("ascii") + "\n")
    return EXIT_OK


def cmd_decode(args, out: TextIO) -> int:
    for _, g in _graphs(args.input):
        out.write(" ".join([str(g.n)] + [f"{u}-{v}" for u, v in g.edges()]) + "\n")
    return EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="vfolkman", description=__doc__)
    ap.add_argument("-v", "--log", action="store_true", help="progress logging to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, inp=True):
        sp = sub.add_parser(name, help=help_)
        if inp:
            sp.add_argument("input", nargs="?", help="graph6 file (default stdin)")
        sp.set_defaults(fn=fn)
        return sp

    add("props", cmd_props, "n |E| min-deg max-deg clique indep chromatic |Aut|")
    sp = add("arrows", cmd_arrows, "does each graph arrow the pattern")
    sp.add_argument("--pattern", type=_pattern)
    sp.add_argument("--universal", nargs=2, type=_positive, metavar=("M", "P"))
    sp.add_argument("--brute", action="store_true", help="enumerate every colouring")
    add("canon", cmd_canon, "canonical graph6")
    sp = add("maxsubsets", cmd_maxsubsets, "maximal K_t-free vertex subsets")
    sp.add_argument("--t", type=_positive, required=True)
    sp = add("extend", cmd_extend, "glue r independent vertices onto (+K) graphs")
    sp.add_argument("--pattern", type=_pattern, required=True)
    sp.add_argument("--q", type=_positive, required=True)
    sp.add_argument("--r", type=_positive, required=True)
    sp.add_argument("--t", type=_positive)
    sp.add_argument("--from-maximal", type=_pattern, metavar="PATTERN",
                    help="input holds maximal graphs for PATTERN; expand them first")
    sp.add_argument("--threads", type=_positive)
    sp = add("populate", cmd_populate, "grow a set of maximal graphs")
    sp.add_argument("--pattern", type=_pattern, required=True)
    sp.add_argument("--q", type=_positive, required=True)
    sp.add_argument("--rounds", type=_positive)
    sp = add("filter", cmd_filter, "keep catalog graphs that are K_q-free and arrow the pattern")
    sp.add_argument("--pattern", type=_pattern, required=True)
    sp.add_argument("--q", type=_positive, required=True)
    sp.add_argument("--lenient", action="store_true", help="skip malformed lines")
    sp = add("pipeline", cmd_pipeline, "run a staged enumeration config", inp=False)
    sp.add_argument("--config", required=True)
    sp.add_argument("--out")
    sp.add_argument("--threads", type=_positive)
    sp = add("folkman", cmd_folkman, "bounds for F_v(pattern; q)", inp=False)
    sp.add_argument("--pattern", type=_pattern, required=True)
    sp.add_argument("--q", type=_positive, required=True)
    sp.add_argument("--verbose", action="store_true", help="list every rule that fired")
    add("encode", cmd_encode, "edge list lines to graph6")
    add("decode", cmd_decode, "graph6 to edge list lines")
    return ap


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    if args.log:
        logging.basicConfig(level=logging.INFO, format="%(relativeCreated)d %(message)s")
    try:
        return args.fn(args, out)
    except (UsageError, pipeline.ConfigError, arrowing.BudgetError, ValueError) as exc:
        print(f"vfolkman {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
