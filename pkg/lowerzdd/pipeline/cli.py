"""
Command line driver.

    lowerzdd solve --graph g.txt --lower 3 --family a.txt --enumerate --stats
    lowerzdd solve --graph g.txt --ratio 1.1 --components 4 --all
    lowerzdd count --graph g.txt --family a.txt
    lowerzdd oracle --graph g.txt --lower 3 --all --enumerate
    lowerzdd bound --graph g.txt --components 4 --ratio 1.1 1.2 1.3

Exit status is 0 on success, 2 on parse or usage errors and 3 when a stage
runs out of node budget.
"""
import argparse
import logging
import sys
from fractions import Fraction
from typing import Iterable, List, Optional, TextIO, Tuple

from lowerzdd.config.settings import settings
from lowerzdd.diagrams import NodeBudgetExceeded, ZddStore, ZddStoreException
from lowerzdd.diagrams.dot import export_dot
from lowerzdd.pipeline.files import (
    GraphParseException,
    format_member,
    parse_family,
    parse_graph,
)
from lowerzdd.pipeline.filter import (
    LowerBoundPipeline,
    PipelineException,
    StageReport,
    lower_bound_from_ratio,
)
from lowerzdd.pipeline.oracle import all_edge_subsets, brute_force_filter
from lowerzdd.search import Graph, GraphException

LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3

DOT_STAGES = ("zs", "tspm", "sup", "b")

STATS_HEADER = "stage time_s nodes cardinality"


def emit_stats(reports: Iterable[StageReport]) -> str:
    rows = [STATS_HEADER]
    for report in reports:
        rows.append(
            f"{report.stage} {report.elapsed:.3f} {report.nodes} {report.cardinality}"
        )
    return "\n".join(rows) + "\n"


def _dot_target(value: str) -> Tuple[str, str]:
    stage, sep, path = value.partition("=")
    if not sep or not path or stage not in DOT_STAGES:
        raise argparse.ArgumentTypeError(
            f"expected STAGE=PATH with STAGE in {', '.join(DOT_STAGES)}, got {value!r}"
        )
    return stage, path


def _add_lower_bound_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--lower", type=int, help="lower bound L on component weight")
    group.add_argument(
        "--ratio", type=Fraction, help="derive L from ratio r (needs --components)"
    )
    parser.add_argument("--components", type=int, help="number of components k")


def _add_family_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--family", help="family file, one edge set per line")
    group.add_argument(
        "--all", action="store_true", help="every subset of the edges (default)"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lowerzdd",
        description="Filter edge-set families by a lower bound on component weight.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="run the diagram pipeline")
    solve.add_argument("--graph", required=True)
    _add_lower_bound_arguments(solve)
    _add_family_arguments(solve)
    solve.add_argument("--enumerate", action="store_true")
    solve.add_argument("--stats", action="store_true")
    solve.add_argument(
        "--dot",
        action="append",
        type=_dot_target,
        default=[],
        metavar="STAGE=PATH",
        help=f"write a stage diagram, STAGE in {', '.join(DOT_STAGES)}",
    )
    solve.add_argument("--budget", type=int, help="node budget per store")

    count = commands.add_parser("count", help="size of an input family")
    count.add_argument("--graph", required=True)
    _add_family_arguments(count)
    count.add_argument("--budget", type=int, help="node budget per store")

    oracle = commands.add_parser("oracle", help="brute-force filter, small graphs")
    oracle.add_argument("--graph", required=True)
    _add_lower_bound_arguments(oracle)
    _add_family_arguments(oracle)
    oracle.add_argument("--enumerate", action="store_true")

    bound = commands.add_parser("bound", help="L(k, r) for the graph's weight")
    bound.add_argument("--graph", required=True)
    bound.add_argument("--components", type=int, required=True)
    bound.add_argument("--ratio", type=Fraction, nargs="+", required=True)
    return parser


def _config(args: argparse.Namespace) -> Optional[dict]:
    budget = getattr(args, "budget", None)
    return None if budget is None else {"NODE_BUDGET": budget}


def _lower_bound(args: argparse.Namespace, g: Graph) -> int:
    if args.lower is not None:
        return args.lower
    if args.components is None:
        raise PipelineException("--ratio needs --components")
    L = lower_bound_from_ratio(g.total_weight, args.components, args.ratio).floor
    LOGGER.info(f" [x] L({args.components}, {float(args.ratio):g}) = {L}")
    return L


def _input_family(args: argparse.Namespace, store: ZddStore):
    if args.family:
        return parse_family(args.family, store)
    return store.all_subsets()


def _write_members(out: TextIO, count: int, members, enumerate_: bool) -> None:
    if enumerate_ and count > settings.ENUMERATE_LIMIT:
        raise PipelineException(
            f"Refusing to enumerate {count} members "
            f"(limit {settings.ENUMERATE_LIMIT})"
        )
    out.write(f"count {count}\n")
    if enumerate_:
        for member in sorted(sorted(m) for m in members()):
            out.write(format_member(member) + "\n")


def _solve(args: argparse.Namespace, out: TextIO) -> int:
    g = parse_graph(args.graph)
    config = _config(args)
    L = _lower_bound(args, g)
    store = ZddStore(g.m, config, stage="A")
    z_a = _input_family(args, store)

    pipeline = LowerBoundPipeline(g, L, store, config)
    z_b = pipeline.filter(z_a)
    _write_members(
        out, store.count(z_b), lambda: store.enumerate(z_b), args.enumerate
    )
    if args.stats:
        out.write(emit_stats(pipeline.stage_reports()))

    roots = {
        "zs": (store, pipeline.zs),
        "tspm": (pipeline.tdd_store, pipeline.tspm),
        "sup": (store, pipeline.sup),
        "b": (store, z_b),
    }
    for stage, path in args.dot:
        target, root = roots[stage]
        with open(path, "w") as handle:
            export_dot(target, root, handle, name=stage)
        LOGGER.info(f" [x] wrote {stage} to {path}")
    return EXIT_OK


def _count(args: argparse.Namespace, out: TextIO) -> int:
    g = parse_graph(args.graph)
    store = ZddStore(g.m, _config(args), stage="A")
    z_a = _input_family(args, store)
    out.write(f"count {store.count(z_a)}\n")
    out.write(f"nodes {store.size(z_a)}\n")
    return EXIT_OK


def _oracle(args: argparse.Namespace, out: TextIO) -> int:
    g = parse_graph(args.graph)
    if g.m > settings.ORACLE_MAX_EDGES:
        raise PipelineException(
            f"The oracle handles at most {settings.ORACLE_MAX_EDGES} edges, "
            f"the graph has {g.m}"
        )
    L = _lower_bound(args, g)
    if args.family:
        store = ZddStore(g.m, stage="A")
        family = store.enumerate(parse_family(args.family, store))
    else:
        family = all_edge_subsets(g.m)
    result = brute_force_filter(g, family, L)
    _write_members(out, len(result), lambda: result, args.enumerate)
    return EXIT_OK


def _bound(args: argparse.Namespace, out: TextIO) -> int:
    g = parse_graph(args.graph)
    out.write("ratio exact floor\n")
    for ratio in args.ratio:
        bound = lower_bound_from_ratio(g.total_weight, args.components, ratio)
        out.write(f"{float(ratio):g} {bound.exact} {bound.floor}\n")
    return EXIT_OK


COMMANDS = {"solve": _solve, "count": _count, "oracle": _oracle, "bound": _bound}


def run_cli(args: argparse.Namespace, out: Optional[TextIO] = None) -> int:
    out = out if out is not None else sys.stdout
    try:
        return COMMANDS[args.command](args, out)
    except NodeBudgetExceeded:
        return EXIT_BUDGET
    except (
        GraphParseException,
        GraphException,
        PipelineException,
        ZddStoreException,
    ) as exc:
        LOGGER.error(f" [x] {exc}")
        return EXIT_USAGE


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    return run_cli(args)


if __name__ == "__main__":
    sys.exit(main())
