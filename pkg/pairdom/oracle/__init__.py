# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

""" Exhaustive ground-truth solvers. Their only virtue is obvious correctness;
    they exist to validate the fast solvers and the reduction claims.
"""

from dataclasses import dataclass
from itertools import combinations
import logging
from typing import List, Optional, Sequence, Tuple

from pairdom.common.errors import CapacityError, InstanceError
from pairdom.common.graph import Graph, Pair, PairedSolution
from pairdom.common.matching import DEFAULT_MATCHING_MAX_VERTICES, perfect_matching_on_masks
from pairdom.config import Config

DEFAULT_MAX_VERTICES = 16
REDUCTION_MAX_VERTICES = 20
DEFAULT_MAX_SUBSETS = 2 ** 22


@dataclass(frozen=True)
class OracleBudget:
    """ Limits on exhaustive searches; exceeding any aborts with a CapacityError """
    max_vertices: int = DEFAULT_MAX_VERTICES
    max_subsets: int = DEFAULT_MAX_SUBSETS
    max_matching_vertices: int = DEFAULT_MATCHING_MAX_VERTICES

    @classmethod
    def from_config(cls, config: Config) -> "OracleBudget":
        return cls(config.oracle_max_vertices, config.oracle_max_subsets,
                   config.matching_max_vertices)

    @classmethod
    def for_reductions(cls) -> "OracleBudget":
        return cls(REDUCTION_MAX_VERTICES, DEFAULT_MAX_SUBSETS)

    def check_vertices(self, graph: Graph) -> None:
        """ Raises a CapacityError if the graph is too large for this budget """
        if graph.n > self.max_vertices:
            raise CapacityError(f"oracle limited to {self.max_vertices} vertices,"
                                f" graph has {graph.n}")

    def check_matching_size(self, size: int) -> None:
        """ Raises a CapacityError if subsets of this size are too large to
            search for a perfect matching
        """
        if size > self.max_matching_vertices:
            raise CapacityError(f"perfect matching search limited to {self.max_matching_vertices}"
                                f" vertices, candidate subsets reach {size}")


class _SubsetCounter:
    def __init__(self, budget: OracleBudget) -> None:
        self.budget = budget
        self.count = 0

    def tick(self) -> None:
        self.count += 1
        if self.count > self.budget.max_subsets:
            raise CapacityError(f"oracle exceeded {self.budget.max_subsets} candidate subsets")


def _closed_masks(graph: Graph) -> List[int]:
    """ Closed neighbourhood bitmasks, bit i - 1 standing for vertex i """
    masks = []
    for vertex in graph.vertices():
        mask = 1 << (vertex - 1)
        for other in graph.neighbours(vertex):
            mask |= 1 << (other - 1)
        masks.append(mask)
    return masks


def _pairs_for(graph: Graph, members: Sequence[int]) -> List[Pair]:
    """ Reconstructs a perfect matching of G[members], lowest vertex first """
    def search(left: List[int]) -> Optional[List[Pair]]:
        if not left:
            return []
        first, rest = left[0], left[1:]
        for other in rest:
            if graph.has_edge(first, other):
                result = search([vertex for vertex in rest if vertex != other])
                if result is not None:
                    return [(first, other)] + result
        return None

    pairs = search(list(members))
    assert pairs is not None, "subset accepted without a perfect matching"
    return pairs


def gamma_p_bruteforce(graph: Graph, budget: OracleBudget = OracleBudget()) -> PairedSolution:
    """ Finds a minimum paired-dominating set by trying every vertex subset of
        size 2, 4, 6, ... in lexicographic order.

        Arguments:
            graph: an isolate-free graph
            budget: the search limits

        Returns:
            the lexicographically smallest optimal solution, with its pairing
    """
    isolated = graph.isolated_vertices()
    if isolated:
        raise InstanceError(f"paired domination is undefined with isolated vertices: {isolated[:10]}")
    if graph.n < 2:
        raise InstanceError("paired domination needs at least two vertices")
    budget.check_vertices(graph)

    closed = _closed_masks(graph)
    open_masks = [mask & ~(1 << i) for i, mask in enumerate(closed)]
    full = (1 << graph.n) - 1
    counter = _SubsetCounter(budget)

    for size in range(2, graph.n + 1, 2):
        budget.check_matching_size(size)
        for subset in combinations(range(graph.n), size):
            counter.tick()
            dominated = 0
            mask = 0
            for index in subset:
                dominated |= closed[index]
                mask |= 1 << index
            if dominated != full:
                continue
            if not perfect_matching_on_masks(open_masks, mask):
                continue
            members = [index + 1 for index in subset]
            logging.debug("oracle: gamma_p = %d after %d subsets", size, counter.count)
            return PairedSolution.from_pairs(_pairs_for(graph, members))
    # an isolate-free graph always has a maximal matching that dominates it
    raise AssertionError("no paired-dominating set found in an isolate-free graph")


def min_vertex_cover_bruteforce(graph: Graph,
                                budget: OracleBudget = OracleBudget()) -> Tuple[int, ...]:
    """ Finds a minimum vertex cover by trying subsets in ascending size and
        lexicographic order.

        Arguments:
            graph: any graph
            budget: the search limits

        Returns:
            the lexicographically smallest minimum cover, ascending
    """
    budget.check_vertices(graph)
    edges = list(graph.edges())
    counter = _SubsetCounter(budget)
    edge_masks = [(1 << (u - 1)) | (1 << (v - 1)) for u, v in edges]
    for size in range(0, graph.n + 1):
        for subset in combinations(range(graph.n), size):
            counter.tick()
            mask = 0
            for index in subset:
                mask |= 1 << index
            if all(edge & mask for edge in edge_masks):
                return tuple(index + 1 for index in subset)
    raise AssertionError("the full vertex set is always a cover")


def gamma_p_of_prefixes(graph: Graph, order: Sequence[int],
                        budget: OracleBudget = OracleBudget()) -> List[Tuple[int, int]]:
    """ The oracle value of every prefix subgraph G[{order[0], .., order[i-1]}]
        for i = 2..n.

        Arguments:
            graph: the full graph
            order: a vertex ordering whose prefixes induce isolate-free subgraphs
            budget: the search limits applied to each prefix

        Returns:
            a list of (i, gamma_p of the prefix of length i)
    """
    values = []
    for length in range(2, len(order) + 1):
        prefix, _ = graph.induced_subgraph(order[:length])
        values.append((length, gamma_p_bruteforce(prefix, budget).size))
    return values
