#!/usr/bin/env python3
# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

"""Script to cross-check the linear-time solvers against the oracle on seeded instances."""

import argparse
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime
import sys
import traceback
from typing import List, Optional, Tuple

from pairdom.block import mpdb, mpdt
from pairdom.common.errors import PairdomError
from pairdom.common.graph import Graph, PairedSolution, verify_paired_dominating
from pairdom.generators import GeneratorSpec, random_block_graph, random_intervals, random_tree
from pairdom.interval import interval_graph, mpdi
from pairdom.oracle import gamma_p_bruteforce

KINDS = ["tree", "block", "interval"]


def write_log(text: str, file_path: str) -> None:
    with open(file_path, "a") as o:
        o.write("[{}] {}\n".format(datetime.now().strftime('%Y-%m-%d %H:%M:%S'), text))


def solve(spec: GeneratorSpec) -> List[Tuple[str, Graph, PairedSolution]]:
    """ Runs every fast solver that applies to the generated instance """
    if spec.kind == "interval":
        graph, ordering = interval_graph(random_intervals(spec))
        return [("mpdi", graph, mpdi(graph, ordering, validate=False))]
    if spec.kind == "tree":
        tree = random_tree(spec)
        return [("mpdt", tree, mpdt(tree)), ("mpdb", tree, mpdb(tree))]
    graph = random_block_graph(spec)
    return [("mpdb", graph, mpdb(graph))]


def check(spec: GeneratorSpec) -> Optional[str]:
    """ Returns a description of the first disagreement found, if any """
    try:
        results = solve(spec)
        optimum = gamma_p_bruteforce(results[0][1]).size
    except PairdomError as err:
        return f"{spec.kind} n={spec.n} seed={spec.seed}: {err}"
    except Exception:  # pylint: disable=broad-except
        traceback.print_exc()
        return f"{spec.kind} n={spec.n} seed={spec.seed}: solver crashed"
    for solver, graph, solution in results:
        verdict = verify_paired_dominating(graph, solution)
        if not verdict:
            return f"{spec.kind} n={spec.n} seed={spec.seed}: {solver} invalid ({verdict.reason})"
        if solution.size != optimum:
            return (f"{spec.kind} n={spec.n} seed={spec.seed}: {solver} found {solution.size},"
                    f" optimum is {optimum}")
    return None


def _main(kinds: List[str], count: int, max_n: int, first_seed: int, workers: int,
          log_file_path: str) -> int:
    specs = [GeneratorSpec(kind, 2 + seed % (max_n - 1), seed)
             for kind in kinds for seed in range(first_seed, first_seed + count)]
    print("Checking {} instances".format(len(specs)))
    with ThreadPoolExecutor(max_workers=workers) as executor:
        failures = [failure for failure in executor.map(check, specs) if failure]
    for failure in failures:
        write_log(failure, log_file_path)
    write_log("Checked {} instances, {} disagreements".format(len(specs), len(failures)),
              log_file_path)
    return len(failures)


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("logfile", type=str, help="The path of the log file to use")
    parser.add_argument("-k", "--kind", dest="kinds", action="append", choices=KINDS,
                        help="An instance kind to check, repeatable (default: all)")
    parser.add_argument("-c", "--count", type=int, default=200,
                        help="The number of instances per kind")
    parser.add_argument("-n", "--max-n", type=int, default=12,
                        help="The largest instance size, at most the oracle limit")
    parser.add_argument("-s", "--seed", type=int, default=0, help="The first seed to use")
    parser.add_argument("-w", "--workers", type=int, default=1,
                        help="The number of worker threads")
    args = parser.parse_args()
    if args.max_n < 2 or args.max_n > 16:
        parser.error("--max-n must be between 2 and 16")
    if _main(args.kinds or KINDS, args.count, args.max_n, args.seed, args.workers, args.logfile):
        print("Errors were encountered, see log file for details")
        sys.exit(1)
    sys.exit(0)
