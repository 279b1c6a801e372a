# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

""" Constructions turning a vertex cover instance into a paired-domination
    instance whose optimum is exactly twice the minimum cover size, one
    producing bipartite graphs and one producing split graphs.

    For a source graph with n vertices and m edges e_1..e_m (canonical order),
    the constructed graph numbers its vertices as
        V1 = 1..n, V2 = n+1..2n, E1 = 2n+1..2n+m, E2 = 2n+m+1..2n+2m
    and joins v_j in V1 (V2) to e_k in E1 (E2) whenever v_j is an end of e_k.
"""

from dataclasses import dataclass
from itertools import combinations
import logging
from typing import Any, Dict, List, NamedTuple, Tuple

import networkx as nx

from pairdom.common.errors import InstanceError, PairdomInputError
from pairdom.common.graph import Graph, Pair

VARIANT_BIPARTITE = "bipartite"
VARIANT_SPLIT = "split"
VARIANTS = (VARIANT_BIPARTITE, VARIANT_SPLIT)

TAG_V1 = "V1"
TAG_V2 = "V2"
TAG_E1 = "E1"
TAG_E2 = "E2"


class VertexTag(NamedTuple):
    """ Which copy a constructed vertex is: the source vertex or edge index and
        whether it belongs to the first or second copy
    """
    tag: str
    index: int

    @property
    def is_vertex_copy(self) -> bool:
        return self.tag in (TAG_V1, TAG_V2)


@dataclass(frozen=True)
class ReductionOutput:
    """ A constructed graph and the provenance of each of its vertices """
    variant: str
    source: Graph
    source_edges: Tuple[Pair, ...]
    gprime: Graph

    def v1(self, vertex: int) -> int:
        return vertex

    def v2(self, vertex: int) -> int:
        return self.source.n + vertex

    def e1(self, edge_index: int) -> int:
        return 2 * self.source.n + edge_index

    def e2(self, edge_index: int) -> int:
        return 2 * self.source.n + self.source.m + edge_index

    def tag_of(self, vertex: int) -> VertexTag:
        """ The provenance of a constructed vertex """
        n, m = self.source.n, self.source.m
        if not 1 <= vertex <= self.gprime.n:
            raise PairdomInputError(f"vertex {vertex} is not in the constructed graph")
        if vertex <= n:
            return VertexTag(TAG_V1, vertex)
        if vertex <= 2 * n:
            return VertexTag(TAG_V2, vertex - n)
        if vertex <= 2 * n + m:
            return VertexTag(TAG_E1, vertex - 2 * n)
        return VertexTag(TAG_E2, vertex - 2 * n - m)

    @property
    def vertex_copies(self) -> range:
        return range(1, 2 * self.source.n + 1)

    @property
    def edge_copies(self) -> range:
        return range(2 * self.source.n + 1, self.gprime.n + 1)

    def to_json(self) -> Dict[str, Any]:
        return {
            "variant": self.variant,
            "source": {
                "n": self.source.n,
                "m": self.source.m,
                "edges": [list(edge) for edge in self.source_edges],
            },
            "vertices": [{"id": vertex, "tag": self.tag_of(vertex).tag,
                          "index": self.tag_of(vertex).index}
                         for vertex in range(1, self.gprime.n + 1)],
        }


def _incidence_edges(source: Graph, source_edges: Tuple[Pair, ...]) -> List[Pair]:
    n, m = source.n, source.m
    edges = []
    for index, (u, v) in enumerate(source_edges, start=1):
        for end in (u, v):
            edges.append((end, 2 * n + index))
            edges.append((n + end, 2 * n + m + index))
    return edges


def _construct(source: Graph, variant: str) -> ReductionOutput:
    if source.m == 0:
        raise InstanceError("the source graph must have at least one edge")
    n = source.n
    source_edges = tuple(source.edges())
    edges = _incidence_edges(source, source_edges)
    if variant == VARIANT_BIPARTITE:
        edges.extend((first, n + second) for first in range(1, n + 1)
                     for second in range(1, n + 1))
    elif variant == VARIANT_SPLIT:
        edges.extend(combinations(range(1, 2 * n + 1), 2))
    else:
        raise PairdomInputError(f"unknown reduction variant: {variant}")
    gprime = Graph.from_edges(2 * n + 2 * source.m, edges)
    logging.debug("%s reduction: %d vertices, %d edges", variant, gprime.n, gprime.m)
    return ReductionOutput(variant, source, source_edges, gprime)


def reduce_bipartite(source: Graph) -> ReductionOutput:
    """ Builds the bipartite instance: V1 x V2 complete bipartite, plus the
        incidence edges of both copies.

        Arguments:
            source: a graph with at least one edge

        Returns:
            the ReductionOutput
    """
    reduction = _construct(source, VARIANT_BIPARTITE)
    assert check_bipartite(reduction.gprime), "bipartite reduction produced an odd cycle"
    return reduction


def reduce_split(source: Graph) -> ReductionOutput:
    """ Builds the split instance: V1 and V2 together form a clique, plus the
        incidence edges of both copies.

        Arguments:
            source: a graph with at least one edge

        Returns:
            the ReductionOutput
    """
    reduction = _construct(source, VARIANT_SPLIT)
    assert check_split_partition(reduction), "split reduction is not a split graph"
    return reduction


def build_reduction(source: Graph, variant: str) -> ReductionOutput:
    """ Dispatches to the construction named by variant """
    if variant == VARIANT_BIPARTITE:
        return reduce_bipartite(source)
    if variant == VARIANT_SPLIT:
        return reduce_split(source)
    raise PairdomInputError(f"unknown reduction variant: {variant}")


def check_bipartite(graph: Graph) -> bool:
    """ Whether the graph can be 2-coloured """
    return nx.is_bipartite(graph.to_networkx())


def check_split_partition(reduction: ReductionOutput) -> bool:
    """ Whether the vertex copies form a clique and the edge copies an
        independent set in the constructed graph
    """
    graph = reduction.gprime
    if not graph.is_clique(reduction.vertex_copies):
        return False
    edge_copies = set(reduction.edge_copies)
    return not any(other in edge_copies for vertex in edge_copies
                   for other in graph.neighbours(vertex))


def is_chordal(graph: Graph) -> bool:
    """ Whether every cycle of length four or more has a chord """
    return nx.is_chordal(graph.to_networkx())
