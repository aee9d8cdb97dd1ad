"""
Command-line front end

Subcommands:
    turan              T(n, r) as graph6, or its K_k count with --k
    cliques            K_k count of a graph
    invariants         chi, sigma and colour-critical edges / vertices of F
    berge-check        search a hypergraph for a Berge copy of F
    expansion          the k-uniform expansion of F
    ex                 ex(n, F)
    ex-gen             ex(n, K_k, F)
    ex-col             ex^col(n, F)
    ex-berge           ex_k(n, Berge-F)
    sandwich           all four values and the chain between them
    symmetrize         symmetrization restarts, witness + g history
    ineq               exact evaluation of the counting inequality
    conjecture-report  sandwich rows for n = |V(F)|..n_max plus facts about F

Graph arguments accept K<m>, C<m>, P<m>, B_<r>_1, 2K_<m>, bowtie, petersen,
a graph6 string or @file.json. Hypergraphs use the one-line text form
"k n : a b c ; ..." or @file.json.

Exit codes: 0 ok, 1 invalid input or parameters, 2 search cap refused,
3 internal invariant violated.

Usage:
    berge-turan turan --n 6 --r 3 --k 3
    berge-turan sandwich --n 5 --k 3 --f K4 --format human
"""
import argparse
import csv
import json
import logging
import re
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, TextIO

from src.cache import CachedSolver, serialize_witness
from src.config import OUTPUT_FORMATS, RunConfig
from src.conjecture import conjecture_report
from src.errors import BergeTuranError, InvalidInputError
from src.extremal import ExtremalResult, Problem, verify_sandwich
from src.graph_core import (
    PETERSEN,
    BookB,
    CompleteGraph,
    Cycle,
    Graph,
    Path as PathFamily,
    TwoCliques2K,
    build_family,
    count_cliques,
    turan_clique_count,
    turan_graph,
)
from src.graph_io import (
    format_hypergraph,
    from_graph6,
    hypergraph_from_json,
    load_graph_file,
    parse_hypergraph,
    to_graph6,
)
from src.hypergraph import Hypergraph, contains_berge, expansion
from src.inequality import eq_check, scan_equ
from src.invariants import chromatic_number, chromatic_profile
from src.symmetrizer import SEED_KINDS, run_restarts

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

_NAMED_TOKENS = [
    (re.compile(r"K(\d+)"), lambda m: CompleteGraph(m)),
    (re.compile(r"C(\d+)"), lambda m: Cycle(m)),
    (re.compile(r"P(\d+)"), lambda m: PathFamily(m)),
    (re.compile(r"B_(\d+)_1"), lambda r: BookB(r)),
    (re.compile(r"2K_(\d+)"), lambda m: TwoCliques2K(m - 1)),
]


def parse_forbidden(spec: str) -> Graph:
    """
    Turn a graph argument into a Graph

    Args:
        spec: Named token (K4, C5, P3, B_3_1, 2K_4, bowtie, petersen),
            a graph6 string, or @path to a JSON edge list

    Returns:
        Graph
    """
    token = spec.strip()
    if token.startswith("@"):
        return load_graph_file(token[1:])
    if token.lower() == "bowtie":
        return build_family(BookB(2))
    if token.lower() == "petersen":
        return build_family(PETERSEN)
    for pattern, family in _NAMED_TOKENS:
        match = pattern.fullmatch(token)
        if match:
            return build_family(family(int(match.group(1))))
    try:
        return from_graph6(token)
    except InvalidInputError:
        raise InvalidInputError(f"cannot parse graph argument {spec!r}") from None


def parse_hypergraph_arg(spec: str) -> Hypergraph:
    token = spec.strip()
    if token.startswith("@"):
        path = Path(token[1:])
        try:
            return hypergraph_from_json(json.loads(path.read_text()))
        except (OSError, json.JSONDecodeError) as exc:
            raise InvalidInputError(f"cannot read hypergraph JSON from {path}: {exc}") from exc
    return parse_hypergraph(token)


# Output -----------------------------------------------------------------------


def _cell(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    if value is None:
        return ""
    return str(value)


def emit(rows: List[Dict[str, Any]], fmt: str, stream: TextIO) -> None:
    """Write rows as JSON lines, CSV, or an aligned table"""
    if fmt == "json":
        for row in rows:
            stream.write(json.dumps(row) + "\n")
        return
    if not rows:
        return
    columns = list(rows[0])
    if fmt == "csv":
        writer = csv.DictWriter(stream, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({key: _cell(row.get(key)) for key in columns})
        return
    table = [[_cell(row.get(key)) for key in columns] for row in rows]
    widths = [max(len(column), *(len(line[i]) for line in table)) for i, column in enumerate(columns)]
    stream.write("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
    for line in table:
        stream.write("  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip() + "\n")


def _result_row(result: ExtremalResult) -> Dict[str, Any]:
    row = result.as_dict()
    witness = result.witness
    if isinstance(witness, Graph):
        row["witness"] = to_graph6(witness)
    elif isinstance(witness, Hypergraph):
        row["witness"] = result.witness_certificate
    else:
        row["witness"] = {"graph6": to_graph6(witness.graph), "red_edges": [list(e) for e in witness.sorted_red_edges()]}
    return row


# Handlers ---------------------------------------------------------------------


def _cmd_turan(args: argparse.Namespace, config: RunConfig, out: TextIO) -> None:
    if args.k is None:
        out.write(to_graph6(turan_graph(args.n, args.r)) + "\n")
    else:
        out.write(f"{turan_clique_count(args.n, args.r, args.k)}\n")


def _cmd_cliques(args: argparse.Namespace, config: RunConfig, out: TextIO) -> None:
    out.write(f"{count_cliques(parse_forbidden(args.graph), args.k)}\n")


def _cmd_invariants(args: argparse.Namespace, config: RunConfig, out: TextIO) -> None:
    forbidden = parse_forbidden(args.f)
    row = {"graph6": to_graph6(forbidden), "n": forbidden.n, "edges": forbidden.edge_count()}
    row.update(chromatic_profile(forbidden).as_dict())
    emit([row], config.output_format, out)


def _cmd_berge_check(args: argparse.Namespace, config: RunConfig, out: TextIO) -> None:
    hypergraph = parse_hypergraph_arg(args.hypergraph)
    witness = contains_berge(hypergraph, parse_forbidden(args.f))
    row = {"contains": witness is not None, "witness": witness.as_dict() if witness else None}
    emit([row], config.output_format, out)


def _cmd_expansion(args: argparse.Namespace, config: RunConfig, out: TextIO) -> None:
    hypergraph = expansion(parse_forbidden(args.f), args.k)
    if config.output_format == "json":
        emit([serialize_witness(hypergraph)], "json", out)
    else:
        out.write(format_hypergraph(hypergraph) + "\n")


def _extremal_handler(problem: Problem):
    def handler(args: argparse.Namespace, config: RunConfig, out: TextIO) -> None:
        solver = CachedSolver(config)
        k = getattr(args, "k", None)
        result = solver(problem, args.n, k, parse_forbidden(args.f))
        emit([_result_row(result)], config.output_format, out)

    return handler


def _cmd_sandwich(args: argparse.Namespace, config: RunConfig, out: TextIO) -> None:
    report = verify_sandwich(args.n, args.k, parse_forbidden(args.f), config, CachedSolver(config))
    emit([report.as_dict()], config.output_format, out)


def _cmd_symmetrize(args: argparse.Namespace, config: RunConfig, out: TextIO) -> None:
    forbidden = parse_forbidden(args.f)
    base = config.seed if args.seed is None else args.seed
    seeds = list(range(base, base + args.restarts))
    best, states = run_restarts(
        args.n, args.k, forbidden, seeds, args.budget,
        workers=config.workers, seed_kind=args.seed_kind, progress=config.progress,
    )
    if args.history:
        try:
            with open(args.history, "w", newline="") as handle:
                writer = csv.writer(handle)
                writer.writerow(["step", "g"])
                writer.writerows(best.g_history)
        except OSError as exc:
            raise InvalidInputError(f"cannot write history to {args.history}: {exc}") from exc
    r = max(chromatic_number(forbidden) - 1, 1)
    row = {
        "seed": best.seed,
        "g": best.g,
        "target": turan_clique_count(args.n, r, args.k),
        "moves_applied": best.moves_applied,
        "attempts": best.attempts,
        "restarts": len(states),
        "graph6": to_graph6(best.current.graph),
        "red_edges": [list(edge) for edge in best.current.sorted_red_edges()],
    }
    emit([row], config.output_format, out)


def _cmd_ineq(args: argparse.Namespace, config: RunConfig, out: TextIO) -> None:
    if args.r is not None:
        reports = [eq_check(args.k, args.r)]
    else:
        reports = list(scan_equ(args.k, args.r_max).reports)
    emit([report.as_row() for report in reports], args.format or "csv", out)


def _cmd_conjecture_report(args: argparse.Namespace, config: RunConfig, out: TextIO) -> None:
    report = conjecture_report(args.n_max, args.k, parse_forbidden(args.f), config, CachedSolver(config))
    if config.output_format == "json":
        emit([report.as_dict()], "json", out)
        return
    rows = []
    for row in report.rows:
        flat = row.as_dict()
        flat.update({key: value for key, value in report.facts.as_dict().items()})
        rows.append(flat)
    emit(rows, config.output_format, out)


# Parser -----------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with status 1 like every other invalid input"""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=None, help="Output format")
    common.add_argument("--workers", type=int, default=None, help="Worker processes")
    common.add_argument("--no-cache", action="store_true", help="Bypass the result cache")
    common.add_argument("--verify-cache", action="store_true", help="Recompute and compare on cache hits")
    common.add_argument("--cache-path", default=None, help="Cache file (overrides BERGE_TURAN_CACHE)")
    common.add_argument("--log-level", default=None, help="Logging level")
    common.add_argument("--progress", action="store_true", help="Show progress bars")
    common.add_argument("--env-file", default=None, help="Explicit .env file")

    parser = _Parser(prog="berge-turan", description="Exact Berge-Turán computations")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        cmd.set_defaults(handler=handler)
        return cmd

    cmd = add("turan", _cmd_turan, "Turán graph or its clique count")
    cmd.add_argument("--n", type=int, required=True)
    cmd.add_argument("--r", type=int, required=True)
    cmd.add_argument("--k", type=int, default=None)

    cmd = add("cliques", _cmd_cliques, "Count k-cliques")
    cmd.add_argument("--graph", required=True)
    cmd.add_argument("--k", type=int, required=True)

    cmd = add("invariants", _cmd_invariants, "Chromatic invariants of F")
    cmd.add_argument("--f", required=True)

    cmd = add("berge-check", _cmd_berge_check, "Search a hypergraph for a Berge copy of F")
    cmd.add_argument("--hypergraph", required=True)
    cmd.add_argument("--f", required=True)

    cmd = add("expansion", _cmd_expansion, "k-uniform expansion of F")
    cmd.add_argument("--f", required=True)
    cmd.add_argument("--k", type=int, required=True)

    cmd = add("ex", _extremal_handler(Problem.EDGE_TURAN), "ex(n, F)")
    cmd.add_argument("--n", type=int, required=True)
    cmd.add_argument("--f", required=True)
    for name, problem, text in [
        ("ex-gen", Problem.GENERALIZED_TURAN, "ex(n, K_k, F)"),
        ("ex-col", Problem.COLORED_TURAN, "ex^col(n, F)"),
        ("ex-berge", Problem.BERGE_TURAN, "ex_k(n, Berge-F)"),
    ]:
        cmd = add(name, _extremal_handler(problem), text)
        cmd.add_argument("--n", type=int, required=True)
        cmd.add_argument("--k", type=int, required=True)
        cmd.add_argument("--f", required=True)

    cmd = add("sandwich", _cmd_sandwich, "Verify the sandwich chain")
    cmd.add_argument("--n", type=int, required=True)
    cmd.add_argument("--k", type=int, required=True)
    cmd.add_argument("--f", required=True)

    cmd = add("symmetrize", _cmd_symmetrize, "Symmetrization restarts")
    cmd.add_argument("--n", type=int, required=True)
    cmd.add_argument("--k", type=int, required=True)
    cmd.add_argument("--f", required=True)
    cmd.add_argument("--seed", type=int, default=None, help="First seed (default BERGE_TURAN_SEED)")
    cmd.add_argument("--budget", type=int, default=10_000)
    cmd.add_argument("--restarts", type=int, default=1)
    cmd.add_argument("--seed-kind", choices=SEED_KINDS, default="turan")
    cmd.add_argument("--history", default=None, help="Write the g history CSV here")

    cmd = add("ineq", _cmd_ineq, "Evaluate the counting inequality (CSV unless --format is given)")
    cmd.add_argument("--k", type=int, required=True)
    group = cmd.add_mutually_exclusive_group(required=True)
    group.add_argument("--r", type=int)
    group.add_argument("--r-max", type=int)

    cmd = add("conjecture-report", _cmd_conjecture_report, "Small-n equality report")
    cmd.add_argument("--n-max", type=int, required=True)
    cmd.add_argument("--k", type=int, required=True)
    cmd.add_argument("--f", required=True)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    """
    Parse argv, run one subcommand and return the exit status

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])
        out: Stream for results (defaults to stdout)

    Returns:
        0, or the exit code of the BergeTuranError raised
    """
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = RunConfig.from_env(
            args.env_file,
            workers=args.workers,
            cache_path=args.cache_path,
            output_format=args.format,
            use_cache=False if args.no_cache else None,
            verify_cache=True if args.verify_cache else None,
            progress=True if args.progress else None,
            log_level=args.log_level,
        )
        logging.basicConfig(
            level=config.log_level.upper(), format=LOG_FORMAT, datefmt=LOG_DATE_FORMAT, stream=sys.stderr
        )
        args.handler(args, config, out)
    except BergeTuranError as exc:
        sys.stderr.write(f"berge-turan: {exc}\n")
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
