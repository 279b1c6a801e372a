# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

""" Block-cut decomposition and the vertex orderings the labelling solvers
    consume: block graph elimination orderings rooted at a cut vertex and
    reverse breadth-first tree orderings.
"""

from dataclasses import dataclass
from itertools import combinations
import logging
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from pairdom.common.errors import InstanceError
from pairdom.common.graph import Graph

EXHAUSTIVE_CLOSURE_LIMIT = 30


@dataclass(frozen=True)
class BlockDecomposition:
    """ The blocks (maximal subgraphs without a cut vertex) of a connected graph,
        each as an ascending vertex tuple, plus the cut vertices.
    """
    blocks: Tuple[Tuple[int, ...], ...]
    cut_vertices: FrozenSet[int]


@dataclass(frozen=True)
class EliminationOrdering:
    """ A vertex ordering v_1..v_n with its father/children structure.

        All per-vertex tuples are indexed by vertex id (index 0 unused).
        father[v] is the latest neighbour of v in the ordering, or 0 for the
        final vertex. home_block[v] identifies the block v left the graph with,
        so the children of any vertex sharing a home block form a clique.
    """
    order: Tuple[int, ...]
    position: Tuple[int, ...]
    father: Tuple[int, ...]
    children: Tuple[Tuple[int, ...], ...]
    home_block: Tuple[int, ...]

    @classmethod
    def from_order(cls, graph: Graph, order: Sequence[int],
                   home_block: Optional[Sequence[int]] = None) -> "EliminationOrdering":
        """ Derives fathers and children from an ordering: F(v_i) = v_j with j
            the largest index of a neighbour after i.

            Arguments:
                graph: the graph the ordering is for
                order: the vertex ordering, a permutation of the vertex ids
                home_block: block identifiers per vertex id, if known

            Returns:
                the EliminationOrdering
        """
        n = graph.n
        if sorted(order) != list(graph.vertices()):
            raise ValueError("ordering is not a permutation of the vertices")
        position = [0] * (n + 1)
        for index, vertex in enumerate(order, start=1):
            position[vertex] = index
        father = [0] * (n + 1)
        for vertex in graph.vertices():
            best = 0
            best_position = position[vertex]
            for other in graph.neighbours(vertex):
                if position[other] > best_position:
                    best = other
                    best_position = position[other]
            father[vertex] = best
        if home_block is None:
            home_block = [0] * (n + 1)
        return cls.from_fathers(order, father, home_block)

    @classmethod
    def from_fathers(cls, order: Sequence[int], father: Sequence[int],
                     home_block: Iterable[int]) -> "EliminationOrdering":
        """ Builds an ordering whose fathers are already known. Children are
            listed in ascending id order.

            Arguments:
                order: the vertex ordering
                father: the latest neighbour per vertex id, 0 for the last vertex
                home_block: block identifiers per vertex id

            Returns:
                the EliminationOrdering
        """
        n = len(order)
        position = [0] * (n + 1)
        for index, vertex in enumerate(order, start=1):
            position[vertex] = index
        children: List[List[int]] = [[] for _ in range(n + 1)]
        for vertex in range(1, n + 1):
            if father[vertex]:
                children[father[vertex]].append(vertex)
        return cls(tuple(order), tuple(position), tuple(father),
                   tuple(map(tuple, children)), tuple(home_block))

    @property
    def last(self) -> int:
        """ The final vertex v_n, the root of the father tree """
        return self.order[-1]

    def later_neighbours(self, graph: Graph, vertex: int) -> Iterator[int]:
        """ The neighbours of a vertex that come after it in the ordering """
        own = self.position[vertex]
        return (other for other in graph.neighbours(vertex) if self.position[other] > own)


def block_cut_decomposition(graph: Graph) -> BlockDecomposition:
    """ Finds blocks and cut vertices with a single iterative depth-first
        search using low-link values.

        Arguments:
            graph: a connected graph

        Returns:
            the BlockDecomposition, blocks sorted
    """
    n = graph.n
    if n == 0:
        raise InstanceError("graph has no vertices")
    if n == 1:
        return BlockDecomposition(((1,),), frozenset())

    adjacency = graph.adjacency
    discovered = [0] * (n + 1)
    low = [0] * (n + 1)
    parent = [0] * (n + 1)
    blocks: List[Tuple[int, ...]] = []

    timer = 1
    discovered[1] = low[1] = timer
    vertex_stack = [1]
    stack = [(1, iter(adjacency[1]))]
    while stack:
        vertex, neighbours = stack[-1]
        descended = False
        for other in neighbours:
            if not discovered[other]:
                timer += 1
                discovered[other] = low[other] = timer
                parent[other] = vertex
                vertex_stack.append(other)
                stack.append((other, iter(adjacency[other])))
                descended = True
                break
            if other != parent[vertex] and discovered[other] < low[vertex]:
                low[vertex] = discovered[other]
        if descended:
            continue
        stack.pop()
        if not stack:
            break
        above = stack[-1][0]
        if low[vertex] < low[above]:
            low[above] = low[vertex]
        if low[vertex] >= discovered[above]:
            block = [above]
            while True:
                member = vertex_stack.pop()
                block.append(member)
                if member == vertex:
                    break
            blocks.append(tuple(sorted(block)))

    if timer < n:
        raise InstanceError("graph is disconnected")

    counts = [0] * (n + 1)
    for block in blocks:
        for vertex in block:
            counts[vertex] += 1
    cut_vertices = frozenset(v for v in graph.vertices() if counts[v] >= 2)
    blocks.sort()
    logging.debug("found %d blocks and %d cut vertices", len(blocks), len(cut_vertices))
    return BlockDecomposition(tuple(blocks), cut_vertices)


def block_graph_blocks(graph: Graph) -> BlockDecomposition:
    """ Finds the blocks of a block graph with one breadth-first search from
        vertex n, rejecting any graph that is not a block graph.

        Every block of a block graph hangs below its vertex closest to the
        search root, so the other members of a block are children of that
        vertex in the search tree and adjacent to one another.

        Arguments:
            graph: the graph to decompose

        Returns:
            the BlockDecomposition, blocks in order of discovery
    """
    n = graph.n
    if n == 0:
        raise InstanceError("graph has no vertices")
    if n == 1:
        return BlockDecomposition(((1,),), frozenset())

    adjacency = graph.adjacency
    seen = bytearray(n + 1)
    parent = [0] * (n + 1)
    seen[n] = 1
    visited = [n]
    # visited grows while it is walked
    for vertex in visited:
        for other in adjacency[vertex]:
            if not seen[other]:
                seen[other] = 1
                parent[other] = vertex
                visited.append(other)
    if len(visited) < n:
        raise InstanceError("graph is disconnected")

    group = [-1] * (n + 1)
    child_count = [0] * (n + 1)
    members: List[List[int]] = []
    for vertex in visited[1:]:
        up = parent[vertex]
        child_count[up] += 1
        if group[vertex] >= 0:
            continue
        index = len(members)
        group[vertex] = index
        block = [up, vertex]
        for other in adjacency[vertex]:
            if parent[other] == up and group[other] < 0:
                group[other] = index
                block.append(other)
        members.append(block)

    for vertex in visited[1:]:
        up = parent[vertex]
        own = group[vertex]
        neighbours = adjacency[vertex]
        for other in neighbours:
            if group[other] != own and other != up and parent[other] != vertex:
                raise InstanceError(f"graph is not a block graph: edge {vertex} {other}"
                                    " closes a cycle through two blocks")
        # neighbours are the parent, the rest of the block and the children
        if len(neighbours) != len(members[own]) - 1 + child_count[vertex]:
            raise InstanceError("graph is not a block graph:"
                                f" the block of vertex {vertex} is not a clique")

    root_blocks = sum(1 for block in members if block[0] == n)
    cut_vertices = frozenset(vertex for vertex in visited[1:] if child_count[vertex])
    if root_blocks >= 2:
        cut_vertices |= {n}
    blocks = tuple(tuple(sorted(block)) for block in members)
    logging.debug("block graph has %d blocks and %d cut vertices", len(blocks), len(cut_vertices))
    return BlockDecomposition(blocks, cut_vertices)


def is_block_graph(graph: Graph) -> bool:
    """ Whether the graph is connected and every block induces a clique """
    try:
        block_graph_blocks(graph)
    except InstanceError:
        return False
    return True


def is_tree(graph: Graph) -> bool:
    """ Whether the graph is connected and acyclic """
    return graph.n >= 1 and graph.m == graph.n - 1 and graph.is_connected()


def _first_other(block: Tuple[int, ...], vertex: int) -> int:
    return block[1] if block[0] == vertex else block[0]


def block_elimination_ordering(graph: Graph) -> EliminationOrdering:
    """ Builds an ordering of a block graph such that any two later neighbours
        of a vertex are adjacent, and every father is a cut vertex.

        The root is the largest cut vertex, or vertex n if the graph is a
        single clique. Blocks are removed from the leaves of the block tree
        inwards: a block follows every block hanging below its members, its
        members other than the cut vertex joining it to the root side follow
        consecutively, and that cut vertex comes later. Within a block the
        cut vertices come first, then the rest, both ascending. The blocks
        hanging below a vertex are visited by their smallest other member.

        Arguments:
            graph: a connected block graph with at least two vertices

        Returns:
            the EliminationOrdering, the root last
    """
    if graph.n < 2:
        raise InstanceError("block graph solver needs at least two vertices")
    decomposition = block_graph_blocks(graph)
    blocks = decomposition.blocks
    n = graph.n
    is_cut = bytearray(n + 1)
    for vertex in decomposition.cut_vertices:
        is_cut[vertex] = 1
    root = max(decomposition.cut_vertices) if decomposition.cut_vertices else n

    blocks_of: List[List[int]] = [[] for _ in range(n + 1)]
    for index, block in enumerate(blocks):
        for vertex in block:
            blocks_of[vertex].append(index)

    def hanging_below(vertex: int, arrived: int) -> List[Tuple[int, int]]:
        others = [index for index in blocks_of[vertex] if index != arrived]
        if len(others) > 1:
            others.sort(key=lambda index: _first_other(blocks[index], vertex))
        return [(index, vertex) for index in others]

    father = [0] * (n + 1)
    home_block = [-1] * (n + 1)
    # built back to front: each block's members, then what hangs below them
    backwards = [root]
    stack = hanging_below(root, -1)
    while stack:
        index, anchor = stack.pop()
        rest = [vertex for vertex in blocks[index] if vertex != anchor]
        emitted = [vertex for vertex in rest if is_cut[vertex]]
        emitted.extend(vertex for vertex in rest if not is_cut[vertex])
        for vertex in emitted:
            father[vertex] = anchor
            home_block[vertex] = index
        backwards.extend(reversed(emitted))
        for vertex in emitted:
            if is_cut[vertex]:
                stack.extend(hanging_below(vertex, index))

    backwards.reverse()
    logging.debug("block elimination ordering built for %d vertices, root %d", n, root)
    return EliminationOrdering.from_fathers(backwards, father, home_block)


def tree_elimination_ordering(graph: Graph) -> EliminationOrdering:
    """ Orders a tree by non-increasing distance from the root, vertex id n:
        the reverse of a breadth-first search that visits neighbours in
        ascending order. Each father is the breadth-first parent.

        Arguments:
            graph: a tree with at least two vertices

        Returns:
            the EliminationOrdering, every vertex in its own home block
    """
    n = graph.n
    if n < 2:
        raise InstanceError("tree solver needs at least two vertices")
    if graph.m != n - 1:
        raise InstanceError("graph is not a tree")
    adjacency = graph.adjacency
    father = [0] * (n + 1)
    seen = bytearray(n + 1)
    seen[n] = 1
    visited = [n]
    for vertex in visited:
        for other in adjacency[vertex]:
            if not seen[other]:
                seen[other] = 1
                father[other] = vertex
                visited.append(other)
    if len(visited) < n:
        raise InstanceError("graph is not a tree")
    visited.reverse()
    return EliminationOrdering.from_fathers(visited, father, range(n + 1))


def check_closure_property(graph: Graph, ordering: EliminationOrdering) -> bool:
    """ Checks that v_i v_j and v_i v_k in E imply v_j v_k in E for i < j < k.
        Small graphs are checked over all triples, larger ones by checking that
        the later neighbours of each vertex form a clique.

        Arguments:
            graph: the graph
            ordering: the ordering to check

        Returns:
            True if the property holds
    """
    order = ordering.order
    if sorted(order) != list(graph.vertices()):
        return False
    if graph.n <= EXHAUSTIVE_CLOSURE_LIMIT:
        for i, j, k in combinations(range(len(order)), 3):
            first, second, third = order[i], order[j], order[k]
            if graph.has_edge(first, second) and graph.has_edge(first, third) \
                    and not graph.has_edge(second, third):
                return False
        return True
    for vertex in order:
        later = list(ordering.later_neighbours(graph, vertex))
        if not graph.is_clique(later):
            return False
    return True
