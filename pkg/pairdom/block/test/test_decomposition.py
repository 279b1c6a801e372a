# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

# for test files, silence irrelevant and noisy pylint warnings
# pylint: disable=no-self-use,protected-access,missing-docstring

from itertools import combinations
import random
import unittest

import networkx as nx

from pairdom.block.decomposition import (
    EliminationOrdering,
    block_cut_decomposition,
    block_elimination_ordering,
    block_graph_blocks,
    check_closure_property,
    is_block_graph,
    is_tree,
    tree_elimination_ordering,
)
from pairdom.common.errors import InstanceError
from pairdom.common.graph import Graph
from pairdom.generators import GeneratorSpec, random_block_graph, random_tree

STAR = Graph.from_edges(4, [(1, 4), (2, 4), (3, 4)])
TRIANGLE_WITH_PENDANT = Graph.from_edges(4, [(1, 2), (1, 3), (2, 3), (3, 4)])
TWO_CUT_VERTICES = Graph.from_edges(5, [(1, 3), (1, 4), (2, 3), (2, 5), (3, 5)])
C4 = Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1)])


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def complete_graph(n):
    return Graph.from_edges(n, combinations(range(1, n + 1), 2))


class TestBlockCut(unittest.TestCase):
    def test_path(self):
        decomposition = block_cut_decomposition(path_graph(4))
        assert decomposition.blocks == ((1, 2), (2, 3), (3, 4))
        assert decomposition.cut_vertices == {2, 3}

    def test_clique(self):
        decomposition = block_cut_decomposition(complete_graph(5))
        assert decomposition.blocks == ((1, 2, 3, 4, 5),)
        assert not decomposition.cut_vertices

    def test_cycle_is_one_block(self):
        assert block_cut_decomposition(C4).blocks == ((1, 2, 3, 4),)

    def test_single_vertex(self):
        assert block_cut_decomposition(Graph.from_edges(1, [])).blocks == ((1,),)

    def test_disconnected(self):
        with self.assertRaisesRegex(InstanceError, "disconnected"):
            block_cut_decomposition(Graph.from_edges(4, [(1, 2), (3, 4)]))

    def test_against_networkx(self):
        rng = random.Random(17)
        for _ in range(200):
            n = rng.randint(2, 14)
            edges = [edge for edge in combinations(range(1, n + 1), 2) if rng.randint(0, 9) < 3]
            graph = Graph.from_edges(n, edges)
            if not graph.is_connected():
                continue
            reference = graph.to_networkx()
            expected = sorted(tuple(sorted(block))
                              for block in nx.biconnected_components(reference))
            decomposition = block_cut_decomposition(graph)
            assert list(decomposition.blocks) == expected, edges
            assert decomposition.cut_vertices == set(nx.articulation_points(reference))


class TestBlockGraphBlocks(unittest.TestCase):
    def test_two_cut_vertices(self):
        decomposition = block_graph_blocks(TWO_CUT_VERTICES)
        assert sorted(decomposition.blocks) == [(1, 3), (1, 4), (2, 3, 5)]
        assert decomposition.cut_vertices == {1, 3}

    def test_root_as_cut_vertex(self):
        assert block_graph_blocks(STAR).cut_vertices == {4}
        assert block_graph_blocks(path_graph(3)).cut_vertices == {2}

    def test_agrees_with_low_links(self):
        for seed in range(200):
            graph = random_block_graph(GeneratorSpec("block", 2 + seed % 30, seed, max_clique=6))
            expected = block_cut_decomposition(graph)
            found = block_graph_blocks(graph)
            assert tuple(sorted(found.blocks)) == expected.blocks, seed
            assert found.cut_vertices == expected.cut_vertices, seed

    def test_rejects(self):
        diamond = Graph.from_edges(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
        # two triangles joined by an edge between non-shared vertices
        bridged = Graph.from_edges(6, [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (3, 4),
                                       (2, 5)])
        for graph in [C4, diamond, bridged, Graph.from_edges(5, [(i, i % 5 + 1)
                                                                  for i in range(1, 6)])]:
            with self.assertRaisesRegex(InstanceError, "not a block graph"):
                block_graph_blocks(graph)
        with self.assertRaisesRegex(InstanceError, "disconnected"):
            block_graph_blocks(Graph.from_edges(4, [(1, 2), (3, 4)]))
        with self.assertRaises(InstanceError):
            block_graph_blocks(Graph.from_edges(0, []))

    def test_recognition_against_networkx(self):
        rng = random.Random(5)
        for _ in range(300):
            n = rng.randint(2, 9)
            edges = [edge for edge in combinations(range(1, n + 1), 2) if rng.randint(0, 9) < 4]
            graph = Graph.from_edges(n, edges)
            reference = graph.to_networkx()
            expected = nx.is_connected(reference) and all(
                len(block) * (len(block) - 1) // 2 == reference.subgraph(block).number_of_edges()
                for block in nx.biconnected_components(reference))
            assert is_block_graph(graph) == expected, edges


class TestRecognition(unittest.TestCase):
    def test_examples(self):
        assert is_block_graph(path_graph(5))
        assert is_block_graph(complete_graph(4))
        assert is_block_graph(TRIANGLE_WITH_PENDANT)
        assert not is_block_graph(C4)
        assert not is_block_graph(Graph.from_edges(4, [(1, 2), (3, 4)]))

    def test_trees(self):
        assert is_tree(STAR)
        assert not is_tree(TRIANGLE_WITH_PENDANT)
        assert not is_tree(Graph.from_edges(4, [(1, 2), (2, 3)]))

    def test_generated(self):
        for seed in range(50):
            assert is_block_graph(random_block_graph(GeneratorSpec("block", 30, seed)))
            assert is_tree(random_tree(GeneratorSpec("tree", 30, seed)))


class TestBlockOrdering(unittest.TestCase):
    def test_star(self):
        ordering = block_elimination_ordering(STAR)
        assert ordering.order == (1, 2, 3, 4)
        assert ordering.father[1:] == (4, 4, 4, 0)
        assert ordering.children[4] == (1, 2, 3)

    def test_clique(self):
        assert block_elimination_ordering(complete_graph(3)).order == (1, 2, 3)

    def test_triangle_with_pendant(self):
        ordering = block_elimination_ordering(TRIANGLE_WITH_PENDANT)
        assert ordering.order == (1, 2, 4, 3)
        assert ordering.father[1:] == (3, 3, 0, 3)
        # 1 and 2 left the graph in the same block, 4 in another
        assert ordering.home_block[1] == ordering.home_block[2]
        assert ordering.home_block[1] != ordering.home_block[4]
        assert check_closure_property(TRIANGLE_WITH_PENDANT, ordering)

    def test_rooted_at_largest_cut_vertex(self):
        # the block holding 2, 3 and 5 is reached last, and only 3 in it is a cut vertex
        ordering = block_elimination_ordering(TWO_CUT_VERTICES)
        assert ordering.order == (4, 1, 2, 5, 3)
        assert ordering.last == 3
        assert ordering.father[1:] == (3, 3, 0, 1, 3)
        assert check_closure_property(TWO_CUT_VERTICES, ordering)

    def test_cut_vertices_lead_their_block(self):
        # 2 has the block {2, 3} hanging below it, so it comes before 1
        graph = Graph.from_edges(5, [(1, 2), (1, 5), (2, 5), (2, 3), (4, 5)])
        ordering = block_elimination_ordering(graph)
        assert ordering.order == (3, 2, 1, 4, 5)
        assert ordering.father[1:] == (5, 5, 2, 5, 0)

    def test_fathers_are_cut_vertices(self):
        for seed in range(200):
            graph = random_block_graph(GeneratorSpec("block", 3 + seed % 28, seed, max_clique=5))
            cut_vertices = block_cut_decomposition(graph).cut_vertices
            ordering = block_elimination_ordering(graph)
            if not cut_vertices:
                assert ordering.last == graph.n
                continue
            assert ordering.last == max(cut_vertices), seed
            for vertex in graph.vertices():
                if vertex != ordering.last:
                    assert ordering.father[vertex] in cut_vertices, (seed, vertex)

    def test_rejects(self):
        with self.assertRaisesRegex(InstanceError, "not a block graph"):
            block_elimination_ordering(C4)
        with self.assertRaises(InstanceError):
            block_elimination_ordering(Graph.from_edges(1, []))
        with self.assertRaisesRegex(InstanceError, "disconnected"):
            block_elimination_ordering(Graph.from_edges(4, [(1, 2), (3, 4)]))

    def test_generated_orderings_are_closed(self):
        for seed in range(300):
            graph = random_block_graph(GeneratorSpec("block", 2 + seed % 29, seed, max_clique=5))
            ordering = block_elimination_ordering(graph)
            assert sorted(ordering.order) == list(graph.vertices())
            assert check_closure_property(graph, ordering), seed

    def test_children_of_a_block_are_cliques(self):
        for seed in range(100):
            graph = random_block_graph(GeneratorSpec("block", 25, seed))
            ordering = block_elimination_ordering(graph)
            for vertex in graph.vertices():
                groups = {}
                for child in ordering.children[vertex]:
                    groups.setdefault(ordering.home_block[child], []).append(child)
                for group in groups.values():
                    assert graph.is_clique(group)

    def test_father_is_latest_neighbour(self):
        graph = random_block_graph(GeneratorSpec("block", 40, 5))
        ordering = block_elimination_ordering(graph)
        for vertex in graph.vertices():
            later = list(ordering.later_neighbours(graph, vertex))
            if vertex == ordering.last:
                assert not later
                assert ordering.father[vertex] == 0
            else:
                assert ordering.father[vertex] == max(later, key=lambda v: ordering.position[v])

    def test_large_uses_neighbour_scan(self):
        graph = random_block_graph(GeneratorSpec("block", 500, 1))
        assert check_closure_property(graph, block_elimination_ordering(graph))


class TestTreeOrdering(unittest.TestCase):
    def test_path(self):
        ordering = tree_elimination_ordering(path_graph(4))
        assert ordering.order == (1, 2, 3, 4)
        assert ordering.father[1:] == (2, 3, 4, 0)

    def test_star_rooted_at_leaf(self):
        graph = Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])
        ordering = tree_elimination_ordering(graph)
        assert ordering.order == (3, 2, 1, 4)
        assert ordering.children[1] == (2, 3)

    def test_rejects(self):
        with self.assertRaisesRegex(InstanceError, "not a tree"):
            tree_elimination_ordering(complete_graph(3))
        with self.assertRaises(InstanceError):
            tree_elimination_ordering(Graph.from_edges(1, []))

    def test_closed(self):
        for seed in range(100):
            graph = random_tree(GeneratorSpec("tree", 2 + seed % 20, seed))
            assert check_closure_property(graph, tree_elimination_ordering(graph))


class TestClosureCheck(unittest.TestCase):
    def test_violation(self):
        # 2 comes first, and its later neighbours 1 and 3 are not adjacent
        graph = path_graph(4)
        ordering = EliminationOrdering.from_order(graph, [2, 1, 3, 4])
        assert not check_closure_property(graph, ordering)

    def test_violation_large(self):
        graph = path_graph(40)
        order = [2] + [1] + list(range(3, 41))
        assert not check_closure_property(graph, EliminationOrdering.from_order(graph, order))

    def test_not_a_permutation(self):
        with self.assertRaises(ValueError):
            EliminationOrdering.from_order(path_graph(3), [1, 2, 2])
