# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

""" Matchings: exhaustive checks for small graphs, and the linear matching of a
    disjoint union of cliques used by the block graph solver.
"""

from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from .errors import CapacityError, PairdomInputError
from .graph import Graph, Pair

DEFAULT_MATCHING_MAX_VERTICES = 24


def _neighbour_masks(graph: Graph, vertices: Sequence[int]) -> List[int]:
    """ Bitmasks of neighbours within the given vertices, indexed by position """
    position = {vertex: i for i, vertex in enumerate(vertices)}
    masks = []
    for vertex in vertices:
        mask = 0
        for other in graph.neighbours(vertex):
            index = position.get(other)
            if index is not None:
                mask |= 1 << index
        masks.append(mask)
    return masks


def perfect_matching_on_masks(masks: Sequence[int], subset: int) -> bool:
    """ Whether the vertices in the subset bitmask can be perfectly matched,
        given per-position neighbour bitmasks. Backtracks on the lowest
        unmatched vertex, remembering subsets already shown to fail.
    """
    failed: Set[int] = set()

    def search(remaining: int) -> bool:
        if not remaining:
            return True
        if remaining in failed:
            return False
        lowest = remaining & -remaining
        index = lowest.bit_length() - 1
        rest = remaining ^ lowest
        options = masks[index] & rest
        while options:
            bit = options & -options
            options ^= bit
            if search(rest ^ bit):
                return True
        failed.add(remaining)
        return False

    if bin(subset).count("1") % 2:
        return False
    return search(subset)


def has_perfect_matching(graph: Graph,
                         max_vertices: int = DEFAULT_MATCHING_MAX_VERTICES) -> bool:
    """ Whether the graph has a perfect matching, by exhaustive backtracking.

        Arguments:
            graph: the graph to check
            max_vertices: the largest graph the search will accept

        Returns:
            True if a perfect matching exists
    """
    if graph.n > max_vertices:
        raise CapacityError(f"perfect matching search limited to {max_vertices} vertices,"
                            f" graph has {graph.n}")
    if graph.n % 2:
        return False
    vertices = list(graph.vertices())
    masks = _neighbour_masks(graph, vertices)
    return perfect_matching_on_masks(masks, (1 << graph.n) - 1)


def maximum_matching_bruteforce(graph: Graph, vertices: Optional[Iterable[int]] = None,
                                max_vertices: int = DEFAULT_MATCHING_MAX_VERTICES) -> int:
    """ The size of a maximum matching of G[vertices], by exhaustive search.

        Arguments:
            graph: the host graph
            vertices: the vertex set to restrict to, all vertices if not given
            max_vertices: the largest vertex set the search will accept

        Returns:
            the number of edges in a maximum matching
    """
    members = sorted(set(vertices)) if vertices is not None else list(graph.vertices())
    graph.check_vertices(members)
    if len(members) > max_vertices:
        raise CapacityError(f"matching search limited to {max_vertices} vertices,"
                            f" given {len(members)}")
    masks = _neighbour_masks(graph, members)

    @lru_cache(maxsize=None)
    def best(remaining: int) -> int:
        if not remaining:
            return 0
        lowest = remaining & -remaining
        index = lowest.bit_length() - 1
        rest = remaining ^ lowest
        result = best(rest)
        options = masks[index] & rest
        while options:
            bit = options & -options
            options ^= bit
            result = max(result, 1 + best(rest ^ bit))
        return result

    return best((1 << len(members)) - 1)


def max_matching_clique_union(graph: Graph, vertices: Iterable[int],
                              clique_partition: Iterable[Iterable[int]],
                              check: bool = True) -> Tuple[List[Pair], List[int]]:
    """ A maximum matching of G[S] when S is partitioned into cliques with no
        edges between them. Each clique is matched in ascending id order; the
        largest id of an odd clique stays unmatched.

        Arguments:
            graph: the host graph
            vertices: the vertex set S
            clique_partition: the cliques partitioning S
            check: whether to validate the partition and clique property

        Returns:
            a tuple of
                the matched pairs, ascending
                the unmatched vertices, ascending
    """
    parts = [sorted(part) for part in clique_partition]
    if check:
        members = set(vertices)
        covered: Set[int] = set()
        for part in parts:
            for vertex in part:
                if vertex in covered:
                    raise PairdomInputError(f"vertex {vertex} appears in more than one clique")
                covered.add(vertex)
            if not graph.is_clique(part):
                raise PairdomInputError(f"part {part} does not induce a clique")
        if covered != members:
            raise PairdomInputError("clique partition does not cover the vertex set exactly")
    pairs: List[Pair] = []
    unmatched: List[int] = []
    for part in parts:
        for i in range(0, len(part) - 1, 2):
            pairs.append((part[i], part[i + 1]))
        if len(part) % 2:
            unmatched.append(part[-1])
    pairs.sort()
    unmatched.sort()
    return pairs, unmatched
