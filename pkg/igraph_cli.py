"""
Command-line front end for the i-graph library.

    python igraph_cli.py build cycle:5
    python igraph_cli.py verify --paths-max 21 --cycles-max 22 --workers 4
    python igraph_cli.py hamilton cycle:19
    python igraph_cli.py export bracelet:4 --format dot --labels pairs

Exit codes: 0 ok, 1 verification failure, 2 usage/parse error, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, Sequence

from loguru import logger

from functions.igraph_core.errors import ConstructionError, IGraphError, InvalidParameterError
from functions.igraph_core.families import (
    bracelet_labels,
    cycle_iset_label,
    label_to_iset,
    lattice_label_to_iset,
    lattice_labels,
    path_iset_lattice_label,
    predicted_cycle_hamiltonicity,
)
from functions.igraph_core.graph_core import Graph, cycle, format_vertex_set, path
from functions.igraph_core.hamilton import DEFAULT_BUDGET, hamiltonian_cycle
from functions.igraph_core.models import VerifyRow
from functions.igraph_core.reconfig import IGraph, build_igraph
from functions.igraph_core.serialization import dumps, igraph_to_json, to_dot, to_json
from functions.igraph_core.targets import FamilySpec, load_target
from functions.igraph_core.traceability import classify_cycle_igraph
from functions.igraph_core.verification import plan_sweep, run_sweep

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

DEFAULT_PATHS_MAX = 21
DEFAULT_CYCLES_MAX = 22


def _configure_logging(verbose: bool) -> None:
    logger.remove()
    logger.add(sys.stderr, level="DEBUG" if verbose else "WARNING")


def cmd_build(args: argparse.Namespace) -> int:
    _, seed = load_target(args.target)
    print(igraph_to_json(build_igraph(seed)))
    return EXIT_OK


def _format_row(row: VerifyRow) -> str:
    labels = "-" if row.labels_ok is None else ("ok" if row.labels_ok else "FAIL")
    return (
        f"{row.family:<6} {row.n:>3} {row.count_closed_form:>7} {row.count_enumerated:>7} "
        f"{row.count_oracle:>7} {row.count_generating_function:>7} {'ok' if row.iso_ok else 'FAIL':>4} "
        f"{labels:>6} {row.seconds:>8.3f}  {'PASS' if row.passed else 'FAIL'}"
    )


def cmd_verify(args: argparse.Namespace) -> int:
    paths_max, cycles_max = args.paths_max, args.cycles_max
    if paths_max is None and cycles_max is None:
        paths_max, cycles_max = DEFAULT_PATHS_MAX, DEFAULT_CYCLES_MAX
    jobs = plan_sweep(paths_max, cycles_max, allow_large=args.allow_large)

    err = sys.stderr
    print(f"{'family':<6} {'n':>3} {'closed':>7} {'enum':>7} {'oracle':>7} {'gf':>7} {'iso':>4} {'labels':>6} {'seconds':>8}", file=err)
    report = run_sweep(jobs, workers=args.workers)
    for row in report.rows:
        print(_format_row(row), file=err)
    print(f"passed={report.passed} failed={report.failed}", file=err)

    print(dumps(report))
    return EXIT_OK if report.failed == 0 else EXIT_FAILED


def _hamilton_graph(spec: Optional[FamilySpec], graph: Graph, want_igraph: bool) -> Graph:
    if (spec is not None and spec.is_seed_family) or want_igraph:
        return build_igraph(graph).graph
    return graph


def cmd_hamilton(args: argparse.Namespace) -> int:
    spec, graph = load_target(args.target)
    if spec is not None and spec.name == "cycle":
        _, report = classify_cycle_igraph(spec.param, args.budget)
        expected = predicted_cycle_hamiltonicity(spec.param)
    else:
        report = hamiltonian_cycle(_hamilton_graph(spec, graph, args.igraph), args.budget)
        expected = None

    print(dumps(report))
    if report.status == "unknown":
        print(f"inconclusive after {report.steps} steps", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    if expected is not None:
        agree = expected == report.status
        print(f"predicted: {expected} ({'agrees' if agree else 'DISAGREES'})", file=sys.stderr)
        if not agree:
            return EXIT_FAILED
    return EXIT_OK


def _pair_labels(spec: FamilySpec, ig: IGraph) -> List[str]:
    n = spec.param
    if n % 3 != 1 or (spec.name == "cycle" and n < 4):
        raise InvalidParameterError(f"pair labels need n = 3k+1, got {spec}")
    if spec.name == "path":
        return [str(path_iset_lattice_label(n, s)) for s in ig.isets]
    return [str(cycle_iset_label(n, s)) for s in ig.isets]


def _family_iset_labels(spec: FamilySpec) -> List[str]:
    """Labels of a bracelet/lattice vertex as the i-set it stands for."""
    n = 3 * spec.param + 1
    if spec.name == "bracelet":
        seed = cycle(n)
        return [format_vertex_set(seed, label_to_iset(n, lab)) for lab in bracelet_labels(spec.param)]
    seed = path(n)
    return [format_vertex_set(seed, lattice_label_to_iset(n, lab)) for lab in lattice_labels(spec.param)]


def cmd_export(args: argparse.Namespace) -> int:
    spec, graph = load_target(args.target)
    mode = args.labels

    if (spec is not None and spec.is_seed_family) or args.igraph:
        ig = build_igraph(graph)
        if mode == "pairs":
            if spec is None:
                raise InvalidParameterError("pair labels are only defined for path:N and cycle:N targets")
            ig = ig.relabeled(_pair_labels(spec, ig))
        elif mode == "indices":
            ig = ig.relabeled(None)
        out = igraph_to_json(ig) if args.format == "json" else to_dot(ig.graph)
    else:
        if mode == "indices":
            graph = graph.relabel(None)
        elif mode == "isets":
            if spec is None:
                raise InvalidParameterError("i-set labels need a bracelet:K or lattice:K target")
            graph = graph.relabel(_family_iset_labels(spec))
        out = to_json(graph) if args.format == "json" else to_dot(graph)

    sys.stdout.write(out if out.endswith("\n") else out + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="igraph_cli",
        description="Build and check token-slide i-graphs of paths, cycles and small graphs.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="i-graph JSON of a seed graph")
    p.add_argument("target", help="path:N, cycle:N, bracelet:K, lattice:K or a JSON graph file")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="check counts and i-graph structure for paths and cycles")
    p.add_argument("--paths-max", type=int, default=None)
    p.add_argument("--cycles-max", type=int, default=None)
    p.add_argument("--allow-large", action="store_true", help="allow sweeps beyond n=22")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hamilton", help="Hamiltonicity report")
    p.add_argument("target")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search step limit")
    p.add_argument("--igraph", action="store_true", help="analyse the i-graph of a JSON seed graph")
    p.set_defaults(func=cmd_hamilton)

    p = sub.add_parser("export", help="render a graph as DOT or JSON")
    p.add_argument("target")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--labels", choices=("isets", "pairs", "indices"), default=None)
    p.add_argument("--igraph", action="store_true", help="export the i-graph of a JSON seed graph")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return args.func(args)
    except ConstructionError as e:
        logger.error(f"construction failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED
    except IGraphError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
