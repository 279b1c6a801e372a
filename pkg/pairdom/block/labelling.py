# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

""" Linear-time minimum paired-domination for block graphs and trees.

    Both solvers walk an elimination ordering once, maintaining per vertex a
    domination flag D, a status L (0: unchosen, 1: chosen but unpaired,
    2: chosen and paired) and a partner for every paired vertex.
"""

from dataclasses import dataclass
import logging
from typing import Dict, List

from pairdom.common.graph import Graph, PairedSolution
from pairdom.common.matching import max_matching_clique_union

from .decomposition import (
    EliminationOrdering,
    block_elimination_ordering,
    tree_elimination_ordering,
)

UNCHOSEN = 0
PENDING = 1
PAIRED = 2


@dataclass
class VertexLabels:
    """ Working state of the labelling walk, each list indexed by vertex id """
    dominated: List[int]
    label: List[int]
    partner: List[int]

    @classmethod
    def blank(cls, n: int) -> "VertexLabels":
        """ All vertices undominated and unchosen """
        return cls([0] * (n + 1), [UNCHOSEN] * (n + 1), [0] * (n + 1))

    def pair(self, first: int, second: int) -> None:
        """ Marks two vertices as partners """
        self.label[first] = PAIRED
        self.label[second] = PAIRED
        self.partner[first] = second
        self.partner[second] = first

    def to_solution(self) -> PairedSolution:
        """ The paired vertices as a solution """
        pairs = [(vertex, partner) for vertex, partner in enumerate(self.partner)
                 if partner and vertex < partner]
        return PairedSolution.from_pairs(pairs)


@dataclass(frozen=True)
class LabellingResult:
    """ A solution together with the ordering and labels that produced it """
    ordering: EliminationOrdering
    labels: VertexLabels
    solution: PairedSolution


def _dominate_closed(graph: Graph, labels: VertexLabels, vertex: int) -> None:
    dominated = labels.dominated
    dominated[vertex] = 1
    for other in graph.neighbours(vertex):
        dominated[other] = 1


def _child_groups(ordering: EliminationOrdering, waiting: List[int]) -> List[List[int]]:
    groups: Dict[int, List[int]] = {}
    for child in waiting:
        groups.setdefault(ordering.home_block[child], []).append(child)
    return list(groups.values())


def _first_unchosen_child(ordering: EliminationOrdering, labels: VertexLabels,
                          vertex: int) -> int:
    for child in ordering.children[vertex]:
        if labels.label[child] == UNCHOSEN:
            return child
    raise AssertionError(f"vertex {vertex} has no unchosen child to pair with")


def solve_with_labels(graph: Graph, ordering: EliminationOrdering) -> LabellingResult:
    """ Runs the labelling walk over an ordering whose children sharing a home
        block are pairwise adjacent.

        For each v_i in order: if v_i is undominated (and not last) its father
        becomes pending and dominates its closed neighbourhood. Then if v_i is
        dominated, its pending children C' are all paired: a maximum matching
        of G[C'] pairs what it can, the smallest leftover w pairs with v_i
        (which then dominates its closed neighbourhood), and every other
        leftover pairs with its smallest unchosen child. Finally, if v_n is
        undominated or pending, it pairs with its smallest unchosen child.

        Arguments:
            graph: the connected graph
            ordering: an ordering with the closure property

        Returns:
            the LabellingResult
    """
    labels = VertexLabels.blank(graph.n)
    dominated = labels.dominated
    label = labels.label
    adjacency = graph.adjacency
    father = ordering.father
    children = ordering.children
    last = ordering.last

    for vertex in ordering.order:
        if not dominated[vertex]:
            if vertex == last:
                continue
            pending = father[vertex]
            label[pending] = PENDING
            dominated[pending] = 1
            for other in adjacency[pending]:
                dominated[other] = 1
        own_children = children[vertex]
        if not own_children:
            continue
        waiting = [child for child in own_children if label[child] == PENDING]
        if not waiting:
            continue
        if len(waiting) == 1:
            unmatched = waiting
        else:
            matched, unmatched = max_matching_clique_union(graph, waiting,
                                                           _child_groups(ordering, waiting),
                                                           check=False)
            for first, second in matched:
                labels.pair(first, second)
        if not unmatched:
            continue
        labels.pair(vertex, unmatched[0])
        _dominate_closed(graph, labels, vertex)
        for leftover in unmatched[1:]:
            labels.pair(leftover, _first_unchosen_child(ordering, labels, leftover))

    if not dominated[last] or label[last] == PENDING:
        labels.pair(last, _first_unchosen_child(ordering, labels, last))
        dominated[last] = 1

    solution = labels.to_solution()
    logging.debug("labelling walk over %d vertices chose %d", graph.n, solution.size)
    return LabellingResult(ordering, labels, solution)


def solve_block_graph(graph: Graph) -> LabellingResult:
    """ Builds a block elimination ordering and runs the labelling walk on it """
    return solve_with_labels(graph, block_elimination_ordering(graph))


def solve_tree(graph: Graph) -> LabellingResult:
    """ Runs the labelling walk over the reverse breadth-first order of a tree """
    return solve_with_labels(graph, tree_elimination_ordering(graph))


def mpdb(graph: Graph) -> PairedSolution:
    """ A minimum paired-dominating set of a connected block graph.

        Arguments:
            graph: a connected block graph with at least two vertices

        Returns:
            the PairedSolution
    """
    return solve_block_graph(graph).solution


def mpdt(graph: Graph) -> PairedSolution:
    """ A minimum paired-dominating set of a tree.

        Arguments:
            graph: a tree with at least two vertices

        Returns:
            the PairedSolution
    """
    return solve_tree(graph).solution
