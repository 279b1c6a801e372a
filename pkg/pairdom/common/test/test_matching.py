# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

# for test files, silence irrelevant and noisy pylint warnings
# pylint: disable=no-self-use,protected-access,missing-docstring

from itertools import combinations
import random
import unittest

import networkx as nx

from pairdom.common.errors import CapacityError, PairdomInputError
from pairdom.common.graph import Graph
from pairdom.common.matching import (
    has_perfect_matching,
    max_matching_clique_union,
    maximum_matching_bruteforce,
)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(1, n + 1), 2))


def perfect_by_edge_subsets(graph: Graph) -> bool:
    """ Independent check: any n/2 edges that touch every vertex """
    if graph.n % 2:
        return False
    edges = list(graph.edges())
    for chosen in combinations(edges, graph.n // 2):
        touched = {vertex for edge in chosen for vertex in edge}
        if len(touched) == graph.n:
            return True
    return False


class TestPerfectMatching(unittest.TestCase):
    def test_small(self):
        assert has_perfect_matching(complete_graph(2))
        assert not has_perfect_matching(Graph.from_edges(3, [(1, 2), (2, 3)]))
        assert has_perfect_matching(Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1)]))

    def test_star_has_none(self):
        assert not has_perfect_matching(Graph.from_edges(4, [(1, 4), (2, 4), (3, 4)]))

    def test_size_guard(self):
        with self.assertRaises(CapacityError):
            has_perfect_matching(Graph.from_edges(26, [(1, 2)]))
        assert not has_perfect_matching(Graph.from_edges(26, [(1, 2)]), max_vertices=30)

    def test_against_edge_subsets(self):
        rng = random.Random(3)
        for _ in range(300):
            n = rng.randint(1, 10)
            edges = [pair for pair in combinations(range(1, n + 1), 2) if rng.random() < 0.35]
            graph = Graph.from_edges(n, edges)
            assert has_perfect_matching(graph) == perfect_by_edge_subsets(graph), edges


class TestMaximumMatching(unittest.TestCase):
    def test_against_networkx(self):
        rng = random.Random(8)
        for _ in range(200):
            n = rng.randint(1, 11)
            edges = [pair for pair in combinations(range(1, n + 1), 2) if rng.random() < 0.3]
            graph = Graph.from_edges(n, edges)
            reference = nx.Graph()
            reference.add_nodes_from(range(1, n + 1))
            reference.add_edges_from(edges)
            expected = len(nx.max_weight_matching(reference, maxcardinality=True))
            assert maximum_matching_bruteforce(graph) == expected

    def test_restricted(self):
        graph = complete_graph(5)
        assert maximum_matching_bruteforce(graph, [1, 2, 3]) == 1
        assert maximum_matching_bruteforce(graph) == 2


class TestCliqueUnion(unittest.TestCase):
    def test_odd_clique(self):
        graph = complete_graph(3)
        assert max_matching_clique_union(graph, {1, 2, 3}, [{1, 2, 3}]) == ([(1, 2)], [3])

    def test_two_cliques(self):
        graph = Graph.from_edges(4, [(1, 2), (3, 4)])
        result = max_matching_clique_union(graph, {1, 2, 3, 4}, [{1, 2}, {3, 4}])
        assert result == ([(1, 2), (3, 4)], [])

    def test_singleton_and_five(self):
        edges = list(combinations(range(2, 7), 2))
        graph = Graph.from_edges(6, edges)
        pairs, unmatched = max_matching_clique_union(graph, set(range(1, 7)),
                                                     [{1}, {2, 3, 4, 5, 6}])
        assert pairs == [(2, 3), (4, 5)]
        assert unmatched == [1, 6]
        assert len(pairs) == maximum_matching_bruteforce(graph)

    def test_bad_partitions(self):
        graph = Graph.from_edges(4, [(1, 2), (3, 4)])
        with self.assertRaisesRegex(PairdomInputError, "does not induce a clique"):
            max_matching_clique_union(graph, {1, 2, 3}, [{1, 2, 3}])
        with self.assertRaisesRegex(PairdomInputError, "does not cover"):
            max_matching_clique_union(graph, {1, 2, 3}, [{1, 2}])
        with self.assertRaisesRegex(PairdomInputError, "more than one clique"):
            max_matching_clique_union(graph, {1, 2}, [{1, 2}, {2}])

    def test_random_unions(self):
        rng = random.Random(21)
        for _ in range(300):
            n = rng.randint(1, 12)
            vertices = list(range(1, n + 1))
            rng.shuffle(vertices)
            parts = []
            while vertices:
                size = rng.randint(1, len(vertices))
                parts.append(vertices[:size])
                vertices = vertices[size:]
            edges = [pair for part in parts for pair in combinations(sorted(part), 2)]
            graph = Graph.from_edges(n, edges)
            pairs, unmatched = max_matching_clique_union(graph, range(1, n + 1), parts)
            assert len(pairs) == maximum_matching_bruteforce(graph)
            assert len(unmatched) == sum(len(part) % 2 for part in parts)
