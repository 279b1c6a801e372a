# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

""" Interval representations, the intersection graphs they describe, and the
    left-endpoint ordering the interval solver walks.
"""

from dataclasses import dataclass
from heapq import heappop, heappush
from itertools import combinations
import logging
from typing import Iterable, List, NamedTuple, Sequence, Tuple

from pairdom.common.errors import InstanceError, PairdomInputError
from pairdom.common.graph import Graph, Pair
from pairdom.common.path import get_full_path

EXHAUSTIVE_ORDERING_LIMIT = 30
COUNTEREXAMPLE_FILE = get_full_path(__file__, "data", "cex6.ivl")


class Interval(NamedTuple):
    """ A closed integer interval [a, b] standing for vertex `id` """
    id: int
    a: int
    b: int

    def intersects(self, other: "Interval") -> bool:
        """ Whether the two closed intervals share a point """
        return self.a <= other.b and other.a <= self.b


@dataclass(frozen=True)
class IntervalRep:
    """ A family of intervals with ids 1..n, in id order """
    intervals: Tuple[Interval, ...]

    def __post_init__(self) -> None:
        for index, interval in enumerate(self.intervals, start=1):
            if interval.id != index:
                raise PairdomInputError(f"interval ids must run 1..n in order, found {interval.id}"
                                        f" at position {index}")
            if interval.a > interval.b:
                raise PairdomInputError(f"interval {interval.id}: left endpoint {interval.a}"
                                        f" exceeds right endpoint {interval.b}")

    @classmethod
    def from_endpoints(cls, endpoints: Iterable[Tuple[int, int]]) -> "IntervalRep":
        """ Builds a representation from (a, b) pairs, numbering them from 1 """
        return cls(tuple(Interval(index, a, b)
                         for index, (a, b) in enumerate(endpoints, start=1)))

    @property
    def n(self) -> int:
        """ The number of intervals """
        return len(self.intervals)

    def __getitem__(self, vertex: int) -> Interval:
        return self.intervals[vertex - 1]


@dataclass(frozen=True)
class LeftOrdering:
    """ The vertices u_1..u_n by increasing left endpoint, ties broken by right
        endpoint then id.

        father[v] is the earliest neighbour of v in the ordering when that
        neighbour precedes v, and v itself otherwise (only u_1 on a connected
        graph). Both per-vertex tuples are indexed by vertex id.
    """
    order: Tuple[int, ...]
    position: Tuple[int, ...]
    father: Tuple[int, ...]

    @classmethod
    def from_order(cls, graph: Graph, order: Sequence[int]) -> "LeftOrdering":
        """ Computes fathers for the given ordering of the graph's vertices """
        position = [0] * (graph.n + 1)
        for index, vertex in enumerate(order, start=1):
            position[vertex] = index
        father = [0] * (graph.n + 1)
        for vertex in order:
            best = vertex
            for other in graph.neighbours(vertex):
                if position[other] < position[best]:
                    best = other
            father[vertex] = best
        return cls(tuple(order), tuple(position), tuple(father))

    def at(self, index: int) -> int:
        """ The vertex u_index, 1-based """
        return self.order[index - 1]

    def prefix(self, length: int) -> Tuple[int, ...]:
        """ The vertex set V_length = {u_1, .., u_length} """
        return self.order[:length]


def parse_intervals(text: str) -> IntervalRep:
    """ Parses the interval format: a line "n" followed by n lines "a b".
        Lines starting with '#' and blank lines are ignored.

        Arguments:
            text: the document contents

        Returns:
            the IntervalRep, ids assigned 1..n in file order
    """
    count = None
    endpoints: List[Tuple[int, int]] = []
    for line_number, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if count is None:
            if len(parts) != 1:
                raise PairdomInputError(f"line {line_number}: expected the interval count")
            try:
                count = int(parts[0])
            except ValueError as err:
                raise PairdomInputError(f"line {line_number}: expected the interval count,"
                                        f" found {line!r}") from err
            if count < 0:
                raise PairdomInputError(f"line {line_number}: negative interval count")
            continue
        if len(parts) != 2:
            raise PairdomInputError(f"line {line_number}: expected two endpoints, found {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError as err:
            raise PairdomInputError(f"line {line_number}: expected two integer endpoints,"
                                    f" found {line!r}") from err
        if a > b:
            raise PairdomInputError(f"line {line_number}: left endpoint {a} exceeds right"
                                    f" endpoint {b}")
        if len(endpoints) == count:
            raise PairdomInputError(f"line {line_number}: more than the {count} intervals declared")
        endpoints.append((a, b))
    if count is None:
        raise PairdomInputError("missing header line 'n'")
    if len(endpoints) != count:
        raise PairdomInputError(f"expected {count} intervals, found {len(endpoints)}")
    return IntervalRep.from_endpoints(endpoints)


def serialize_intervals(rep: IntervalRep) -> str:
    """ Writes the interval format, intervals in id order """
    lines = [str(rep.n)]
    lines.extend(f"{interval.a} {interval.b}" for interval in rep.intervals)
    return "\n".join(lines) + "\n"


def read_intervals(path: str) -> IntervalRep:
    """ Reads and parses an interval file """
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as err:
        raise PairdomInputError(f"cannot read interval file {path}: {err}") from err
    return parse_intervals(text)


def looks_like_intervals(text: str) -> bool:
    """ Whether the first content line of a document is a lone count, as in
        the interval format, rather than the "n m" graph header
    """
    for raw in text.split("\n"):
        line = raw.strip()
        if line and not line.startswith("#"):
            return len(line.split()) == 1
    return False


def load_counterexample() -> IntervalRep:
    """ The built-in six interval instance on which the legacy right-endpoint
        algorithm returns four vertices while two suffice.
    """
    return read_intervals(COUNTEREXAMPLE_FILE)


def intersection_edges(rep: IntervalRep) -> List[Pair]:
    """ All intersecting pairs, found by a sweep over left endpoints that keeps
        the intervals still open in a heap keyed by right endpoint.

        Arguments:
            rep: the interval representation

        Returns:
            the edges as (smaller id, larger id) pairs
    """
    active: List[Tuple[int, int]] = []
    edges: List[Pair] = []
    for interval in sorted(rep.intervals, key=lambda iv: (iv.a, iv.b, iv.id)):
        while active and active[0][0] < interval.a:
            heappop(active)
        for _, other in active:
            edges.append((other, interval.id) if other < interval.id else (interval.id, other))
        heappush(active, (interval.b, interval.id))
    return edges


def interval_graph(rep: IntervalRep) -> Tuple[Graph, LeftOrdering]:
    """ Builds the intersection graph of a connected interval family together
        with its left-endpoint ordering.

        Arguments:
            rep: the interval representation

        Returns:
            a tuple of
                the Graph on ids 1..n
                the LeftOrdering
    """
    graph = Graph.from_edges(rep.n, intersection_edges(rep))
    if rep.n and not graph.is_connected():
        raise InstanceError("interval graph is disconnected")
    order = [iv.id for iv in sorted(rep.intervals, key=lambda iv: (iv.a, iv.b, iv.id))]
    logging.debug("interval graph with %d vertices and %d edges", graph.n, graph.m)
    return graph, LeftOrdering.from_order(graph, order)


def check_left_ordering(graph: Graph, ordering: LeftOrdering) -> bool:
    """ Checks that u_j u_i in E with j < i implies u_j u_k in E for every
        j < k <= i. Small graphs are checked over all triples; larger ones by
        checking that each vertex is adjacent to every vertex between it and
        its furthest later neighbour.

        Arguments:
            graph: the graph
            ordering: the ordering to check

        Returns:
            True if the property holds
    """
    order = ordering.order
    if sorted(order) != list(graph.vertices()):
        return False
    if graph.n <= EXHAUSTIVE_ORDERING_LIMIT:
        for j, k, i in combinations(range(len(order)), 3):
            if graph.has_edge(order[j], order[i]) and not graph.has_edge(order[j], order[k]):
                return False
        return True
    position = ordering.position
    for vertex in order:
        own = position[vertex]
        later = [position[other] for other in graph.neighbours(vertex) if position[other] > own]
        if later and max(later) - own != len(later):
            return False
    return True
