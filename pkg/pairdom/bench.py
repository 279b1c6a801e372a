# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

""" Wall time measurements of the linear-time solvers on seeded instances of
    growing size. Instance generation is not timed.
"""

from dataclasses import dataclass
import logging
import time
from typing import Any, Callable, Dict, List, Optional, Sequence

from pairdom.block import mpdb, mpdt
from pairdom.common.errors import PairdomInputError
from pairdom.generators import (
    KIND_BLOCK,
    KIND_INTERVAL,
    KIND_TREE,
    GeneratorSpec,
    random_block_graph,
    random_intervals,
    random_tree,
)
from pairdom.interval import interval_graph, mpdi

BENCH_KINDS = (KIND_TREE, KIND_BLOCK, KIND_INTERVAL)
SOLVER_NAMES = {KIND_TREE: "mpdt", KIND_BLOCK: "mpdb", KIND_INTERVAL: "mpdi"}
# interval endpoints are drawn from 0..INTERVAL_RANGE_FACTOR * n
INTERVAL_RANGE_FACTOR = 4


@dataclass(frozen=True)
class BenchRow:
    """ A single timed solver run """
    kind: str
    n: int
    m: int
    seconds: float
    size: int
    ratio: Optional[float] = None

    @property
    def solver(self) -> str:
        return SOLVER_NAMES[self.kind]

    def to_json(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "solver": self.solver,
            "n": self.n,
            "m": self.m,
            "seconds": self.seconds,
            "size": self.size,
            "ratio": self.ratio,
        }


@dataclass(frozen=True)
class BenchReport:
    rows: List[BenchRow]
    seed: int

    def rows_for(self, kind: str) -> List[BenchRow]:
        return [row for row in self.rows if row.kind == kind]

    def to_json(self) -> Dict[str, Any]:
        return {"seed": self.seed, "rows": [row.to_json() for row in self.rows]}

    def render_text(self) -> str:
        lines = ["kind\tsolver\tn\tm\tseconds\tratio"]
        for row in self.rows:
            ratio = "-" if row.ratio is None else f"{row.ratio:.2f}"
            lines.append(f"{row.kind}\t{row.solver}\t{row.n}\t{row.m}\t{row.seconds:.4f}\t{ratio}")
        return "\n".join(lines)


def parse_sizes(text: str) -> List[int]:
    """ Parses a comma separated list of sizes, allowing forms like 1e5.

        Arguments:
            text: the list, e.g. "1e4,1e5"

        Returns:
            the sizes as integers, ascending
    """
    sizes = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            value = float(part)
        except ValueError as err:
            raise PairdomInputError(f"invalid size {part!r}") from err
        if value != int(value) or value < 2:
            raise PairdomInputError(f"sizes must be integers of at least 2, not {part}")
        sizes.append(int(value))
    check_sizes(sizes)
    return sizes


def check_sizes(sizes: Sequence[int]) -> None:
    if not sizes:
        raise PairdomInputError("no benchmark sizes given")
    for smaller, larger in zip(sizes, sizes[1:]):
        if larger <= smaller:
            raise PairdomInputError(f"benchmark sizes must be ascending: {smaller} then {larger}")


def _prepare(kind: str, n: int, seed: int) -> Callable[[], Any]:
    """ Generates an instance and returns the untimed-setup solver call for it """
    if kind == KIND_TREE:
        tree = random_tree(GeneratorSpec(kind, n, seed))
        return lambda: (tree, mpdt(tree))
    if kind == KIND_BLOCK:
        graph = random_block_graph(GeneratorSpec(kind, n, seed))
        return lambda: (graph, mpdb(graph))
    if kind == KIND_INTERVAL:
        rep = random_intervals(GeneratorSpec(kind, n, seed,
                                             endpoint_range=INTERVAL_RANGE_FACTOR * n,
                                             bridge_gaps=True))
        host, ordering = interval_graph(rep)
        return lambda: (host, mpdi(host, ordering, validate=False))
    raise PairdomInputError(f"cannot benchmark instance kind {kind!r},"
                            f" expected one of {', '.join(BENCH_KINDS)}")


def time_solver(kind: str, n: int, seed: int = 0) -> BenchRow:
    """ Times the solver for a kind on one seeded instance of size n """
    call = _prepare(kind, n, seed)
    start = time.perf_counter()
    graph, solution = call()
    seconds = time.perf_counter() - start
    logging.info("bench: %s on n=%d took %.4fs", SOLVER_NAMES[kind], n, seconds)
    return BenchRow(kind, n, graph.m, seconds, solution.size)


def run_bench(kinds: Sequence[str], sizes: Sequence[int], seed: int = 0) -> BenchReport:
    """ Times each kind's solver at each size. Each row after the first of a
        kind carries the ratio of its time to the previous row's.

        Arguments:
            kinds: instance kinds to benchmark
            sizes: ascending instance sizes
            seed: the generator seed shared by all instances

        Returns:
            a BenchReport
    """
    check_sizes(sizes)
    if not kinds:
        raise PairdomInputError("no benchmark kinds given")
    for kind in kinds:
        if kind not in BENCH_KINDS:
            raise PairdomInputError(f"cannot benchmark instance kind {kind!r},"
                                    f" expected one of {', '.join(BENCH_KINDS)}")
    rows = []
    for kind in kinds:
        previous: Optional[BenchRow] = None
        for n in sizes:
            row = time_solver(kind, n, seed)
            if previous is not None and previous.seconds > 0:
                row = BenchRow(row.kind, row.n, row.m, row.seconds, row.size,
                               row.seconds / previous.seconds)
            rows.append(row)
            previous = row
    return BenchReport(rows, seed)
