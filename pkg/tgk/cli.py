"""
Command-line interface

    tgk analyze --corpus cycle:3
    tgk lattice graph.json --dot
    tgk primes --corpus loop_entrance
    tgk rep --corpus edge --v0 u
    tgk af 3
    tgk selfcheck --graphs 200 --seed 1

Corpus names: edge, omega, loop_entrance, breaking, cycle:N,
cycle_source:N, subset:N, cycles:N,M,...

Exit codes: 0 success, 2 input or precondition error, 3 bound exceeded,
1 anything else.
"""

import argparse
import logging
import sys
from typing import List, Optional

from .classification import primitivity_report
from .config import AnalysisConfig, ConfigBuilder
from .errors import (
    BoundExceededError,
    GraphParseError,
    GraphValidationError,
    PreconditionError,
    TGKError,
    UnknownCorpusError,
)
from .experimentation import CrossCheck, print_summary
from .graph import classify_vertices
from .io import dumps, lattice_to_dot, load_graph, write_output
from .lattice import enumerate_admissible_pairs
from .report import build_report, print_report
from .representations import af_block_check, build_path_rep, commutant_dimension, kernel_pair, verify_ck_pair

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2
EXIT_BOUND = 3


def _add_input(parser: argparse.ArgumentParser):
    parser.add_argument("input", nargs="?", help='graph JSON file, or "-" for stdin')
    parser.add_argument("--corpus", metavar="NAME", help='built-in graph, e.g. "cycle:3"')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tgk",
        description="Ideal structure of graph algebras for finite discrete graphs",
        epilog="Corpus names: edge, omega, loop_entrance, breaking, cycle:N, cycle_source:N, subset:N, cycles:N,M",
    )
    parser.add_argument("--max-vertices", type=int, default=16, help="invariant-set enumeration bound (default 16)")
    parser.add_argument("--max-basis", type=int, default=4096, help="path basis dimension bound (default 4096)")
    parser.add_argument("--max-stem", type=int, default=None, help="negative orbit stem bound (default |E^0|)")
    parser.add_argument("--max-subset-n", type=int, default=6, help="subset graph ground set bound (default 6)")
    parser.add_argument("--no-cross-check", action="store_true", help="skip internal cross-checks")
    parser.add_argument("--parallel", action="store_true", help="enumerate in a thread pool")
    parser.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")

    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="full invariant report")
    _add_input(analyze)
    analyze.add_argument("--summary", action="store_true", help="print a human summary instead of JSON")

    lattice = commands.add_parser("lattice", help="admissible pairs and Hasse diagrams")
    _add_input(lattice)
    lattice.add_argument("--dot", action="store_true", help="emit DOT of the ideal order")

    primes = commands.add_parser("primes", help="prime and primitive ideals")
    _add_input(primes)

    rep = commands.add_parser("rep", help="path representation and relation checks")
    _add_input(rep)
    rep.add_argument("--v0", required=True, help="domain vertex of the path basis")

    af = commands.add_parser("af", help="subset graph dimension law and matrix units")
    af.add_argument("n", type=int)

    selfcheck = commands.add_parser("selfcheck", help="cross-checks over a random family")
    selfcheck.add_argument("--graphs", type=int, default=100)
    selfcheck.add_argument("--seed", type=int, default=0)
    return parser


def config_from_args(args: argparse.Namespace) -> AnalysisConfig:
    return (ConfigBuilder()
            .with_max_vertices(args.max_vertices)
            .with_max_basis(args.max_basis)
            .with_max_stem(args.max_stem)
            .with_max_subset_n(args.max_subset_n)
            .with_cross_check(not args.no_cross_check)
            .with_parallel(args.parallel)
            .build())


def _graph(args: argparse.Namespace, config: AnalysisConfig):
    return load_graph(args.input, args.corpus, max_subset_n=config.max_subset_n)


def cmd_analyze(args: argparse.Namespace, config: AnalysisConfig) -> int:
    report = build_report(_graph(args, config), config)
    if args.summary:
        print_report(report)
    else:
        write_output(dumps(report.to_dict()), args.out)
    return EXIT_OK


def cmd_lattice(args: argparse.Namespace, config: AnalysisConfig) -> int:
    lattice = enumerate_admissible_pairs(_graph(args, config), config.max_vertices, config.parallel, config.cross_check)
    text = lattice_to_dot(lattice) if args.dot else dumps(lattice.to_dict())
    write_output(text, args.out)
    return EXIT_OK


def cmd_primes(args: argparse.Namespace, config: AnalysisConfig) -> int:
    report = primitivity_report(_graph(args, config), config.max_vertices, config.cross_check, config.max_stem)
    write_output(dumps(report.to_dict()), args.out)
    return EXIT_OK


def cmd_rep(args: argparse.Namespace, config: AnalysisConfig) -> int:
    graph = _graph(args, config)
    rep = build_path_rep(graph, args.v0, config.max_basis)
    checks = verify_ck_pair(rep)
    data = {
        'representation': rep.to_dict(),
        'relations': checks.to_dict(),
        'kernel_pair': kernel_pair(rep).to_dict() if args.v0 in classify_vertices(graph).singular else None,
        'commutant_dimension': commutant_dimension(rep, config.commutant_limit),
    }
    write_output(dumps(data), args.out)
    return EXIT_OK if checks.toeplitz_ok else EXIT_FAILURE


def cmd_af(args: argparse.Namespace, config: AnalysisConfig) -> int:
    report = af_block_check(args.n, config.max_subset_n)
    write_output(dumps(report.to_dict()), args.out)
    return EXIT_OK if report.ok else EXIT_FAILURE


def cmd_selfcheck(args: argparse.Namespace, config: AnalysisConfig) -> int:
    summary = CrossCheck(seed=args.seed, graphs=args.graphs).run(parallel=config.parallel)
    if args.out:
        write_output(dumps(summary.to_dict()), args.out)
    else:
        print_summary(summary)
    return EXIT_OK if summary.ok else EXIT_FAILURE


COMMANDS = {
    'analyze': cmd_analyze,
    'lattice': cmd_lattice,
    'primes': cmd_primes,
    'rep': cmd_rep,
    'af': cmd_af,
    'selfcheck': cmd_selfcheck,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    parser = build_parser()
    args = parser.parse_args(argv)

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(format="%(name)s:%(levelname)s:%(message)s", level=level, stream=sys.stderr)

    try:
        return COMMANDS[args.command](args, config_from_args(args))
    except BoundExceededError as error:
        print(f"❌ {error}", file=sys.stderr)
        return EXIT_BOUND
    except (GraphParseError, GraphValidationError, UnknownCorpusError, PreconditionError) as error:
        print(f"❌ {error}", file=sys.stderr)
        return EXIT_INPUT
    except TGKError as error:
        print(f"❌ {type(error).__name__}: {error}", file=sys.stderr)
        return EXIT_FAILURE
