# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

""" Library entry points for each command: load an instance, run the
    requested solver, and independently verify what it produced.
"""

from dataclasses import dataclass, field
import json
import logging
import os
import time
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from pairdom.bench import BenchReport, run_bench
from pairdom.block import is_block_graph, is_tree, mpdb, mpdt
from pairdom.common.errors import InstanceError, PairdomInputError, VerificationError
from pairdom.common.graph import (
    Graph,
    PairedSolution,
    Verdict,
    parse_graph,
    serialize_graph,
    verify_paired_dominating,
)
from pairdom.config import Config
from pairdom.generators import GeneratorSpec, generate_text
from pairdom.interval import (
    IntervalRep,
    LegacyMpdState,
    interval_graph,
    legacy_mpd_trace,
    load_counterexample,
    looks_like_intervals,
    mpdi,
    parse_intervals,
)
from pairdom.interval.representation import intersection_edges
from pairdom.oracle import OracleBudget, gamma_p_bruteforce
from pairdom.reductions import build_reduction

__version__ = "1.0.0"

CLASS_TREE = "tree"
CLASS_BLOCK = "block"
CLASS_INTERVAL = "interval"
CLASS_AUTO = "auto"
CLASSES = (CLASS_TREE, CLASS_BLOCK, CLASS_INTERVAL, CLASS_AUTO)
CLASS_GENERAL = "general"

PROVENANCE_SUFFIX = ".provenance.json"
# what the legacy algorithm and the oracle give on the built-in instance
RECORDED_LEGACY_RESULT = (1, 2, 4, 5)
RECORDED_OPTIMUM = 2


@dataclass(frozen=True)
class Instance:
    """ A parsed input file; interval files keep their representation """
    graph: Graph
    intervals: Optional[IntervalRep] = None

    @property
    def is_interval_format(self) -> bool:
        return self.intervals is not None


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as err:
        raise PairdomInputError(f"cannot read input file {path}: {err}") from err


def load_instance(path: str) -> Instance:
    """ Reads either an interval file or an edge list file, telling the two
        apart by their header line.

        Arguments:
            path: the file to read

        Returns:
            the Instance
    """
    text = _read_text(path)
    if looks_like_intervals(text):
        rep = parse_intervals(text)
        logging.debug("read %d intervals from %s", rep.n, path)
        return Instance(Graph.from_edges(rep.n, intersection_edges(rep)), rep)
    graph = parse_graph(text)
    logging.debug("read graph with %d vertices and %d edges from %s", graph.n, graph.m, path)
    return Instance(graph)


def write_text(text: str, path: str) -> None:
    """ Writes text to a file, reporting failures as input errors """
    try:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as err:
        raise PairdomInputError(f"cannot write {path}: {err}") from err


def write_json(data: Any, path: str) -> None:
    write_text(json.dumps(data, indent=1) + "\n", path)


@dataclass
class RunReport:  # pylint: disable=too-many-instance-attributes
    """ The outcome of a solve, oracle or verify run. The verdict is always
        recomputed from the graph, never taken from the solver.
    """
    command: str
    n: int
    m: int
    graph_class: str
    solver: str
    solution: PairedSolution
    seconds: float
    verdict: Verdict

    @property
    def verified(self) -> bool:
        return bool(self.verdict)

    def require_valid(self) -> None:
        """ Raises a VerificationError if the solution failed verification """
        if not self.verified:
            raise VerificationError(f"{self.solver} solution is not a paired-dominating set"
                                    f" ({self.verdict.reason}: {self.verdict.detail})")

    def to_json(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "instance": {"n": self.n, "m": self.m, "class": self.graph_class},
            "solver": self.solver,
            "solution": self.solution.to_json(),
            "seconds": self.seconds,
            "verdict": {
                "valid": self.verdict.valid,
                "reason": self.verdict.reason,
                "detail": self.verdict.detail,
            },
        }

    def render_text(self) -> str:
        lines = [
            f"instance: n={self.n} m={self.m} class={self.graph_class}",
            f"solver: {self.solver}",
            f"size: {self.solution.size}",
            "vertices: " + " ".join(map(str, self.solution.vertices)),
            "pairs: " + " ".join(f"{u}-{v}" for u, v in self.solution.pairs),
            f"time: {self.seconds:.6f}s",
        ]
        if self.verified:
            lines.append("verdict: valid")
        else:
            lines.append(f"verdict: INVALID ({self.verdict.reason}: {self.verdict.detail})")
        return "\n".join(lines)


def _timed(function: Callable[[], PairedSolution]) -> Tuple[PairedSolution, float]:
    start = time.perf_counter()
    solution = function()
    return solution, time.perf_counter() - start


def _report(command: str, graph: Graph, graph_class: str, solver: str,
            solution: PairedSolution, seconds: float) -> RunReport:
    verdict = verify_paired_dominating(graph, solution)
    report = RunReport(command, graph.n, graph.m, graph_class, solver, solution, seconds, verdict)
    logging.info("%s: %s gave a set of size %d in %.3fs, verdict %s", command, solver,
                 solution.size, seconds, verdict.reason)
    return report


def _solve_interval(instance: Instance) -> PairedSolution:
    assert instance.intervals is not None
    graph, ordering = interval_graph(instance.intervals)
    return mpdi(graph, ordering, validate=False)


def _choose_class(instance: Instance) -> str:
    """ Picks the most specific solver the instance qualifies for: tree, then
        block graph, then interval only when the representation is known
    """
    if is_tree(instance.graph):
        return CLASS_TREE
    if is_block_graph(instance.graph):
        return CLASS_BLOCK
    if instance.is_interval_format:
        return CLASS_INTERVAL
    raise InstanceError("graph is neither a tree nor a block graph,"
                        " and no interval representation was given")


def cmd_solve(path: str, graph_class: str = CLASS_AUTO) -> RunReport:
    """ Solves an instance with the linear-time solver for its class.

        Arguments:
            path: an edge list or interval file
            graph_class: one of CLASSES; auto picks tree, block or interval

        Returns:
            a RunReport with an independently verified solution
    """
    if graph_class not in CLASSES:
        raise PairdomInputError(f"unknown graph class {graph_class!r},"
                                f" expected one of {', '.join(CLASSES)}")
    instance = load_instance(path)
    if graph_class == CLASS_INTERVAL and not instance.is_interval_format:
        raise InstanceError("the interval solver needs an interval representation,"
                            " and an edge list gives none")
    if graph_class == CLASS_AUTO:
        graph_class = _choose_class(instance)
        logging.info("auto: solving as %s", graph_class)

    solvers: Dict[str, Tuple[str, Callable[[], PairedSolution]]] = {
        CLASS_TREE: ("mpdt", lambda: mpdt(instance.graph)),
        CLASS_BLOCK: ("mpdb", lambda: mpdb(instance.graph)),
        CLASS_INTERVAL: ("mpdi", lambda: _solve_interval(instance)),
    }
    solver, function = solvers[graph_class]
    solution, seconds = _timed(function)
    return _report("solve", instance.graph, graph_class, solver, solution, seconds)


def cmd_oracle(path: str, config: Config = Config()) -> RunReport:
    """ Solves an instance exactly by exhaustive search, within the configured budget """
    instance = load_instance(path)
    budget = OracleBudget.from_config(config)
    solution, seconds = _timed(lambda: gamma_p_bruteforce(instance.graph, budget))
    return _report("oracle", instance.graph, CLASS_GENERAL, "oracle", solution, seconds)


def load_solution(path: str) -> PairedSolution:
    """ Reads a solution JSON file as written by solve --output """
    text = _read_text(path)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise PairdomInputError(f"solution file {path} is not valid JSON: {err}") from err
    if not isinstance(data, dict):
        raise PairdomInputError(f"solution file {path} does not hold a JSON object")
    # a full report carries the solution under its own key
    if "solution" in data and isinstance(data["solution"], dict):
        data = data["solution"]
    return PairedSolution.from_json(data)


def cmd_verify(graph_path: str, solution_path: str) -> RunReport:
    """ Checks a stored solution against an instance """
    instance = load_instance(graph_path)
    solution = load_solution(solution_path)
    return _report("verify", instance.graph, CLASS_GENERAL, "none", solution, 0.)


@dataclass
class CounterexampleReport:
    """ The legacy right-endpoint algorithm against the left-endpoint solver
        and the oracle on the built-in instance
    """
    rep: IntervalRep
    legacy: LegacyMpdState
    mpdi_solution: PairedSolution
    oracle_solution: PairedSolution
    verdicts: Dict[str, Verdict] = field(default_factory=dict)

    @property
    def legacy_result(self) -> Tuple[int, ...]:
        return self.legacy.result

    @property
    def legacy_is_worse(self) -> bool:
        return len(self.legacy_result) > self.oracle_solution.size

    @property
    def exit_code(self) -> int:
        return 0 if self.legacy_is_worse else 1

    def require_recorded_outcome(self) -> None:
        """ Raises a VerificationError if the built-in instance no longer gives
            the recorded legacy result, optimum and valid solutions
        """
        problems = []
        if self.legacy_result != RECORDED_LEGACY_RESULT:
            problems.append(f"legacy result changed to {self.legacy_result}")
        if self.oracle_solution.size != RECORDED_OPTIMUM:
            problems.append(f"optimum changed to {self.oracle_solution.size}")
        if self.mpdi_solution.size != self.oracle_solution.size:
            problems.append(f"mpdi found {self.mpdi_solution.size} vertices,"
                            f" the optimum is {self.oracle_solution.size}")
        invalid = sorted(name for name, verdict in self.verdicts.items() if not verdict)
        if invalid:
            problems.append(f"invalid solutions from {', '.join(invalid)}")
        if problems:
            raise VerificationError("counterexample instance: " + "; ".join(problems))

    def to_json(self) -> Dict[str, Any]:
        return {
            "intervals": [[interval.a, interval.b] for interval in self.rep.intervals],
            "legacy": self.legacy.to_json(),
            "legacy_size": len(self.legacy_result),
            "mpdi": self.mpdi_solution.to_json(),
            "oracle": self.oracle_solution.to_json(),
            "verdicts": {name: verdict.valid for name, verdict in self.verdicts.items()},
            "legacy_is_worse": self.legacy_is_worse,
        }

    def render_text(self) -> str:
        def members(values: Tuple[int, ...]) -> str:
            return "{" + ",".join(map(str, values)) + "}"

        lines = ["parameter table:", self.legacy.render_table(), "",
                 "legacy recursion:", self.legacy.render_trace(), "",
                 f"legacy result: {members(self.legacy_result)} (size {len(self.legacy_result)})"]
        for name, solution in [("mpdi", self.mpdi_solution), ("oracle", self.oracle_solution)]:
            state = "valid" if self.verdicts.get(name) else "INVALID"
            lines.append(f"{name} result: {members(solution.vertices)}"
                         f" (size {solution.size}, {state})")
        if self.legacy_is_worse:
            lines.append("legacy result is larger than the optimum")
        else:
            lines.append("legacy result is not larger than the optimum")
        return "\n".join(lines)


def cmd_counterexample() -> CounterexampleReport:
    """ Replays the legacy algorithm on the built-in instance and compares it
        with the left-endpoint solver and the oracle
    """
    rep = load_counterexample()
    legacy = legacy_mpd_trace(rep)
    graph, ordering = interval_graph(rep)
    mpdi_solution = mpdi(graph, ordering, validate=False)
    oracle_solution = gamma_p_bruteforce(graph)
    report = CounterexampleReport(rep, legacy, mpdi_solution, oracle_solution)
    report.verdicts["mpdi"] = verify_paired_dominating(graph, mpdi_solution)
    report.verdicts["oracle"] = verify_paired_dominating(graph, oracle_solution)
    report.require_recorded_outcome()
    logging.info("counterexample: legacy size %d, optimum %d", len(legacy.result),
                 oracle_solution.size)
    return report


def cmd_gen(spec: GeneratorSpec, output: Optional[str] = None) -> str:
    """ Generates an instance, writing it to the output path if given.

        Arguments:
            spec: the generator specification
            output: the path to write to, if any

        Returns:
            the instance text
    """
    text = generate_text(spec)
    if output:
        write_text(text, output)
        logging.info("wrote %s instance with n=%d, seed %d to %s", spec.kind, spec.n,
                     spec.seed, output)
    return text


def provenance_path(output: str) -> str:
    """ The provenance sidecar path belonging to a reduction output path """
    base, _ = os.path.splitext(output)
    return base + PROVENANCE_SUFFIX


def cmd_reduce(path: str, variant: str, output: str) -> List[str]:
    """ Builds the vertex cover reduction of a source graph, writing the
        constructed graph and its provenance sidecar.

        Arguments:
            path: the source graph, an edge list file
            variant: one of the reduction variants
            output: the path for the constructed graph

        Returns:
            the paths written
    """
    instance = load_instance(path)
    try:
        reduction = build_reduction(instance.graph, variant)
    except InstanceError as err:
        raise PairdomInputError(str(err)) from err
    sidecar = provenance_path(output)
    if os.path.abspath(sidecar) == os.path.abspath(output):
        raise PairdomInputError(f"output path {output} would be overwritten by its provenance")
    write_text(serialize_graph(reduction.gprime), output)
    write_json(reduction.to_json(), sidecar)
    logging.info("%s reduction: %d source vertices, %d constructed", variant,
                 instance.graph.n, reduction.gprime.n)
    return [output, sidecar]


def cmd_bench(kinds: Sequence[str], sizes: Sequence[int], seed: int = 0) -> BenchReport:
    """ Times the linear-time solvers on seeded instances of each size.

        Arguments:
            kinds: the instance kinds to time
            sizes: ascending instance sizes
            seed: the generator seed

        Returns:
            a BenchReport with a time ratio between consecutive sizes
    """
    logging.info("bench: kinds %s, sizes %s, seed %d", ", ".join(kinds),
                 ", ".join(map(str, sizes)), seed)
    return run_bench(kinds, sizes, seed)
