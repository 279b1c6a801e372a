# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

# for test files, silence irrelevant and noisy pylint warnings
# pylint: disable=no-self-use,protected-access,missing-docstring

from itertools import combinations
import unittest

from pairdom.common.errors import CapacityError, InstanceError
from pairdom.common.graph import Graph, verify_paired_dominating
from pairdom.config import Config
from pairdom.oracle import (
    OracleBudget,
    gamma_p_bruteforce,
    gamma_p_of_prefixes,
    min_vertex_cover_bruteforce,
)

CEX6_EDGES = [(1, 2), (1, 3), (2, 3), (3, 5), (4, 5), (4, 6), (5, 6)]


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def complete_graph(n):
    return Graph.from_edges(n, combinations(range(1, n + 1), 2))


def star_graph(leaves):
    return Graph.from_edges(leaves + 1, [(i, leaves + 1) for i in range(1, leaves + 1)])


class TestGammaP(unittest.TestCase):
    def test_k2(self):
        solution = gamma_p_bruteforce(complete_graph(2))
        assert solution.vertices == (1, 2)
        assert solution.pairs == ((1, 2),)

    def test_p4(self):
        solution = gamma_p_bruteforce(path_graph(4))
        assert solution.vertices == (2, 3)

    def test_counterexample_graph(self):
        graph = Graph.from_edges(6, CEX6_EDGES)
        solution = gamma_p_bruteforce(graph)
        assert solution.vertices == (3, 5)
        assert verify_paired_dominating(graph, solution)

    def test_dense_and_stars(self):
        for n in range(2, 8):
            assert gamma_p_bruteforce(complete_graph(n)).size == 2
        for leaves in range(1, 8):
            assert gamma_p_bruteforce(star_graph(leaves)).size == 2

    def test_paths(self):
        # a path on n vertices needs 2 * ceil(n / 4) vertices
        for n in range(2, 14):
            assert gamma_p_bruteforce(path_graph(n)).size == 2 * ((n + 3) // 4), n

    def test_always_even_and_valid(self):
        for n in range(2, 7):
            for graph in [path_graph(n), complete_graph(n), star_graph(n - 1)]:
                solution = gamma_p_bruteforce(graph)
                assert solution.size % 2 == 0
                assert verify_paired_dominating(graph, solution)

    def test_isolated_vertex(self):
        with self.assertRaisesRegex(InstanceError, "isolated"):
            gamma_p_bruteforce(Graph.from_edges(3, [(1, 2)]))
        with self.assertRaises(InstanceError):
            gamma_p_bruteforce(Graph.from_edges(1, []))

    def test_vertex_budget(self):
        with self.assertRaises(CapacityError):
            gamma_p_bruteforce(path_graph(17))
        assert gamma_p_bruteforce(path_graph(17), OracleBudget(max_vertices=17)).size == 10

    def test_subset_budget(self):
        with self.assertRaisesRegex(CapacityError, "subsets"):
            gamma_p_bruteforce(path_graph(12), OracleBudget(max_subsets=20))

    def test_matching_budget(self):
        # P5 needs four vertices, P4 only two
        with self.assertRaisesRegex(CapacityError, "perfect matching"):
            gamma_p_bruteforce(path_graph(5), OracleBudget(max_matching_vertices=2))
        assert gamma_p_bruteforce(path_graph(4), OracleBudget(max_matching_vertices=2)).size == 2


class TestBudget(unittest.TestCase):
    def test_from_config(self):
        budget = OracleBudget.from_config(Config(oracle_max_vertices=5, oracle_max_subsets=9))
        assert budget == OracleBudget(5, 9)
        budget = OracleBudget.from_config(Config(matching_max_vertices=6))
        assert budget.max_matching_vertices == 6

    def test_reductions(self):
        assert OracleBudget.for_reductions().max_vertices == 20


class TestVertexCover(unittest.TestCase):
    def test_small(self):
        assert min_vertex_cover_bruteforce(complete_graph(2)) == (1,)
        assert min_vertex_cover_bruteforce(complete_graph(3)) == (1, 2)
        assert min_vertex_cover_bruteforce(star_graph(4)) == (5,)

    def test_p4_is_lexicographically_first(self):
        cover = min_vertex_cover_bruteforce(path_graph(4))
        assert len(cover) == 2
        assert cover == (1, 3)

    def test_edgeless(self):
        assert min_vertex_cover_bruteforce(Graph.from_edges(3, [])) == ()

    def test_budget(self):
        with self.assertRaises(CapacityError):
            min_vertex_cover_bruteforce(path_graph(20))


class TestPrefixes(unittest.TestCase):
    def test_path_prefixes(self):
        values = gamma_p_of_prefixes(path_graph(6), [1, 2, 3, 4, 5, 6])
        assert values == [(2, 2), (3, 2), (4, 2), (5, 4), (6, 4)]

    def test_isolated_prefix(self):
        with self.assertRaises(InstanceError):
            gamma_p_of_prefixes(path_graph(3), [1, 3, 2])
