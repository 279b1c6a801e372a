# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

""" Linear-time minimum paired-domination for connected interval graphs,
    walking the left-endpoint ordering from the right.
"""

import logging
from typing import List, Tuple

from pairdom.common.errors import InstanceError
from pairdom.common.graph import Graph, Pair, PairedSolution

from .representation import IntervalRep, LeftOrdering, check_left_ordering, interval_graph


def mpdi(graph: Graph, ordering: LeftOrdering, validate: bool = True) -> PairedSolution:
    """ Finds a minimum paired-dominating set of a connected interval graph.

        For i = n down to 1, an undominated u_i is handled by pairing F(u_i)
        with F(F(u_i)) when both differ from their own fathers, by pairing u_i
        with F(u_i) when only F(u_i) differs from u_i, and otherwise (u_i is u_1)
        by pairing u_i with u_2.

        Arguments:
            graph: a connected interval graph with at least two vertices
            ordering: its left-endpoint ordering
            validate: whether to check connectivity and the ordering first,
                      needless for the output of interval_graph()

        Returns:
            the PairedSolution
    """
    if graph.n < 2:
        raise InstanceError("interval solver needs at least two vertices")
    if validate:
        if not graph.is_connected():
            raise InstanceError("interval graph is disconnected")
        if not check_left_ordering(graph, ordering):
            raise InstanceError("ordering violates the left-endpoint closure property;"
                                " the representation's endpoint ties cannot be resolved")

    adjacency = graph.adjacency
    father = ordering.father
    position = ordering.position
    dominated = bytearray(graph.n + 1)
    pairs: List[Pair] = []
    lowest = graph.n + 1
    for index in range(graph.n, 0, -1):
        vertex = ordering.order[index - 1]
        if dominated[vertex]:
            continue
        parent = father[vertex]
        if parent != vertex and father[parent] != parent:
            pair: Tuple[int, int] = (parent, father[parent])
        elif parent != vertex:
            pair = (vertex, parent)
        else:
            if index != 1:
                raise InstanceError(f"vertex {vertex} has no earlier neighbour;"
                                    " the interval graph is disconnected")
            pair = (vertex, ordering.order[1])
        for member in pair:
            dominated[member] = 1
            for other in adjacency[member]:
                dominated[other] = 1
        first, second = position[pair[0]], position[pair[1]]
        assert max(first, second) < lowest, f"pair {pair} overlaps an earlier pair"
        lowest = min(first, second)
        pairs.append(pair)
        logging.debug("u_%d = %d undominated, adding pair %s", index, vertex, pair)

    return PairedSolution.from_pairs(pairs)


def solve_intervals(rep: IntervalRep) -> PairedSolution:
    """ Builds the interval graph of a representation and solves it with mpdi() """
    graph, ordering = interval_graph(rep)
    return mpdi(graph, ordering, validate=False)
