# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.
"""The pairdom command line"""

import argparse
import json
import logging
import sys
from typing import Any, Dict, List

from pairdom.bench import BENCH_KINDS, parse_sizes
from pairdom.common.errors import PairdomError
from pairdom.common.logs import changed_logging
from pairdom.config import Config, build_config
from pairdom.generators import KINDS, GeneratorSpec
from pairdom.main import (
    CLASS_AUTO,
    CLASSES,
    __version__,
    cmd_bench,
    cmd_counterexample,
    cmd_gen,
    cmd_oracle,
    cmd_reduce,
    cmd_solve,
    cmd_verify,
    write_json,
)
from pairdom.reductions import VARIANTS

DEFAULT_BENCH_SIZES = "1e4,1e5"
DEFAULT_BENCH_KINDS = ["block", "interval"]


def _emit(report: Any, config: Config) -> None:
    if config.output_json:
        print(json.dumps(report.to_json(), indent=1))
    else:
        print(report.render_text())


def run_solve(options: argparse.Namespace, config: Config) -> int:
    report = cmd_solve(options.input, options.graph_class)
    _emit(report, config)
    if options.output:
        write_json(report.solution.to_json(), options.output)
    report.require_valid()
    return 0


def run_oracle(options: argparse.Namespace, config: Config) -> int:
    report = cmd_oracle(options.input, config)
    _emit(report, config)
    if options.output:
        write_json(report.solution.to_json(), options.output)
    report.require_valid()
    return 0


def run_verify(options: argparse.Namespace, config: Config) -> int:
    report = cmd_verify(options.graph, options.solution)
    _emit(report, config)
    report.require_valid()
    return 0


def run_gen(options: argparse.Namespace, _config: Config) -> int:
    knobs: Dict[str, Any] = {}
    for name in ["max_clique", "endpoint_range", "max_length", "extra_edges", "attempts"]:
        value = getattr(options, name)
        if value is not None:
            knobs[name] = value
    spec = GeneratorSpec(options.kind, options.n, options.seed, bridge_gaps=options.bridge_gaps,
                         **knobs)
    text = cmd_gen(spec, options.output)
    if not options.output:
        sys.stdout.write(text)
    return 0


def run_reduce(options: argparse.Namespace, _config: Config) -> int:
    for path in cmd_reduce(options.input, options.variant, options.output):
        print(f"wrote {path}")
    return 0


def run_counterexample(_options: argparse.Namespace, config: Config) -> int:
    report = cmd_counterexample()
    _emit(report, config)
    return report.exit_code


def run_bench_command(options: argparse.Namespace, config: Config) -> int:
    report = cmd_bench(options.kinds or DEFAULT_BENCH_KINDS, parse_sizes(options.sizes),
                       options.seed)
    _emit(report, config)
    return 0


def build_parser() -> argparse.ArgumentParser:
    """ Builds the parser for all subcommands """
    parser = argparse.ArgumentParser(prog="pairdom",
                                     description="Paired domination solvers, oracle and tools")
    parser.add_argument("-V", "--version", action="store_true", default=False,
                        help="Display the version number and exit.")
    parser.add_argument("-v", "--verbose", action="store_true", default=False,
                        help="Print verbose status information to stderr.")
    parser.add_argument("-d", "--debug", action="store_true", default=False,
                        help="Print debugging information to stderr.")
    parser.add_argument("-l", "--logfile", metavar="PATH", default=None,
                        help="Also write logging output to a file.")

    json_option = argparse.ArgumentParser(add_help=False)
    json_option.add_argument("--json", dest="output_json", action="store_true", default=False,
                             help="Print the report as JSON.")

    commands = parser.add_subparsers(dest="command", metavar="COMMAND")

    solve = commands.add_parser("solve", parents=[json_option],
                                help="Solve an instance with the linear-time solver for its class.")
    solve.add_argument("input", help="An edge list or interval file.")
    solve.add_argument("-c", "--class", dest="graph_class", choices=CLASSES, default=CLASS_AUTO,
                       help="The graph class to solve as (default: %(default)s).")
    solve.add_argument("-o", "--output", metavar="PATH", default=None,
                       help="Write the solution JSON to this file.")
    solve.set_defaults(handler=run_solve)

    oracle = commands.add_parser("oracle", parents=[json_option],
                                 help="Solve a small instance exactly by exhaustive search.")
    oracle.add_argument("input", help="An edge list or interval file.")
    oracle.add_argument("--max-vertices", type=int, default=None,
                        help="The largest instance to search (default: 16).")
    oracle.add_argument("--max-subsets", type=int, default=None,
                        help="The most candidate subsets to try (default: 2**22).")
    oracle.add_argument("--max-matching-vertices", type=int, default=None,
                        help="The largest candidate set to search for a perfect matching"
                             " (default: 24).")
    oracle.add_argument("-o", "--output", metavar="PATH", default=None,
                        help="Write the solution JSON to this file.")
    oracle.set_defaults(handler=run_oracle)

    verify = commands.add_parser("verify", parents=[json_option],
                                 help="Check a solution JSON file against an instance.")
    verify.add_argument("graph", help="An edge list or interval file.")
    verify.add_argument("solution", help="A solution JSON file.")
    verify.set_defaults(handler=run_verify)

    gen = commands.add_parser("gen", help="Generate a seeded random instance.")
    gen.add_argument("-k", "--kind", choices=KINDS, required=True,
                     help="The kind of instance to generate.")
    gen.add_argument("-n", "--n", type=int, required=True, help="The number of vertices.")
    gen.add_argument("-s", "--seed", type=int, default=0,
                     help="The random seed (default: %(default)s).")
    gen.add_argument("--max-clique", type=int, default=None,
                     help="block: the largest clique size (default: 4).")
    gen.add_argument("--endpoint-range", type=int, default=None,
                     help="interval: left endpoints are drawn from 0..this (default: n).")
    gen.add_argument("--max-length", type=int, default=None,
                     help="interval: the longest interval length (default: 6).")
    gen.add_argument("--bridge-gaps", action="store_true", default=False,
                     help="interval: stretch intervals across gaps instead of redrawing.")
    gen.add_argument("--extra-edges", type=int, default=None,
                     help="vc-source: edges added to the spanning tree (default: n // 2).")
    gen.add_argument("--attempts", type=int, default=None,
                     help="interval: how many families to draw before giving up (default: 1000).")
    gen.add_argument("-o", "--output", metavar="PATH", default=None,
                     help="Write the instance here instead of to stdout.")
    gen.set_defaults(handler=run_gen)

    reducer = commands.add_parser("reduce",
                                  help="Build the vertex cover reduction of a source graph.")
    reducer.add_argument("input", help="The source graph, an edge list file.")
    reducer.add_argument("--variant", choices=VARIANTS, required=True,
                         help="The kind of graph to construct.")
    reducer.add_argument("-o", "--output", metavar="PATH", required=True,
                         help="Where to write the constructed graph; provenance goes alongside.")
    reducer.set_defaults(handler=run_reduce)

    counterexample = commands.add_parser("counterexample", parents=[json_option],
                                         help="Replay the legacy interval algorithm on its"
                                              " counterexample.")
    counterexample.set_defaults(handler=run_counterexample)

    bench = commands.add_parser("bench", parents=[json_option],
                                help="Time the linear-time solvers on growing instances.")
    bench.add_argument("-k", "--kind", dest="kinds", action="append", choices=BENCH_KINDS,
                       default=None, help="An instance kind to time, repeatable"
                                          " (default: block and interval).")
    bench.add_argument("--sizes", default=DEFAULT_BENCH_SIZES,
                       help="Comma separated ascending sizes (default: %(default)s).")
    bench.add_argument("-s", "--seed", type=int, default=0,
                       help="The random seed (default: %(default)s).")
    bench.set_defaults(handler=run_bench_command)

    return parser


def main(args: List[str]) -> int:
    """ The entrypoint of pairdom as if it was on the command line

        Arguments:
            args: a list of args as would be given on the command line
                    e.g. ["solve", "--class", "tree", "p4.gr"]

        Returns:
            zero if successful, non-zero otherwise
    """
    parser = build_parser()
    options = parser.parse_args(args)

    # if -V, show version text and exit
    if options.version:
        print("pairdom %s" % __version__)
        return 0

    if not options.command:
        parser.print_help()
        return 2

    try:
        config = build_config(options)
    except PairdomError as err:
        logging.error(str(err))
        return err.exit_code

    with changed_logging(config.logfile, config.verbose, config.debug):
        try:
            return options.handler(options, config)
        except PairdomError as err:
            if not str(err):
                raise
            logging.error(str(err))
            return err.exit_code


def entrypoint() -> None:
    """This is needed for the script generated by setuptools."""
    sys.exit(main(sys.argv[1:]))


if __name__ == '__main__':
    entrypoint()
