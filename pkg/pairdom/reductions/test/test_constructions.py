# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

# for test files, silence irrelevant and noisy pylint warnings
# pylint: disable=no-self-use,protected-access,missing-docstring

from itertools import combinations
import unittest

import networkx as nx

from pairdom.common.errors import InstanceError, PairdomInputError
from pairdom.common.graph import Graph
from pairdom.generators import GeneratorSpec, random_vc_source
from pairdom.reductions.constructions import (
    build_reduction,
    check_bipartite,
    check_split_partition,
    is_chordal,
    reduce_bipartite,
    reduce_split,
)

K2 = Graph.from_edges(2, [(1, 2)])
P3 = Graph.from_edges(3, [(1, 2), (2, 3)])
K3 = Graph.from_edges(3, [(1, 2), (1, 3), (2, 3)])


class TestBipartite(unittest.TestCase):
    def test_k2(self):
        reduction = reduce_bipartite(K2)
        assert reduction.gprime.n == 6
        assert reduction.gprime.m == 8
        assert check_bipartite(reduction.gprime)

    def test_p3(self):
        reduction = reduce_bipartite(P3)
        assert reduction.gprime.n == 10
        for vertex in reduction.edge_copies:
            assert reduction.gprime.degree(vertex) == 2

    def test_edge_copies_attach_to_their_ends(self):
        reduction = reduce_bipartite(K3)
        for index, (u, v) in enumerate(reduction.source_edges, start=1):
            assert reduction.gprime.neighbours(reduction.e1(index)) == (u, v)
            assert reduction.gprime.neighbours(reduction.e2(index)) == (3 + u, 3 + v)

    def test_provenance(self):
        reduction = reduce_bipartite(P3)
        assert [reduction.tag_of(v).tag for v in range(1, 11)] == \
            ["V1"] * 3 + ["V2"] * 3 + ["E1"] * 2 + ["E2"] * 2
        assert reduction.tag_of(8).index == 2
        data = reduction.to_json()
        assert data["variant"] == "bipartite"
        assert data["source"] == {"n": 3, "m": 2, "edges": [[1, 2], [2, 3]]}
        assert data["vertices"][4] == {"id": 5, "tag": "V2", "index": 2}
        with self.assertRaises(PairdomInputError):
            reduction.tag_of(11)

    def test_against_networkx(self):
        for seed in range(20):
            reduction = reduce_bipartite(random_vc_source(GeneratorSpec("vc-source", 5, seed)))
            assert nx.is_bipartite(reduction.gprime.to_networkx())


class TestSplit(unittest.TestCase):
    def test_k2(self):
        reduction = reduce_split(K2)
        assert reduction.gprime.n == 6
        assert reduction.gprime.m == 6 + 4
        assert reduction.gprime.is_clique(range(1, 5))
        assert reduction.gprime.degree(5) == 2
        assert reduction.gprime.degree(6) == 2

    def test_k3(self):
        reduction = reduce_split(K3)
        assert len(reduction.vertex_copies) == 6
        assert len(reduction.edge_copies) == 6
        assert check_split_partition(reduction)
        assert not check_bipartite(reduction.gprime)

    def test_chordal(self):
        for seed in range(20):
            reduction = reduce_split(random_vc_source(GeneratorSpec("vc-source", 2 + seed % 4, seed)))
            assert is_chordal(reduction.gprime)
            assert nx.is_chordal(reduction.gprime.to_networkx())


class TestChecks(unittest.TestCase):
    def test_bipartite(self):
        assert check_bipartite(Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1)]))
        assert not check_bipartite(K3)
        assert check_bipartite(Graph.from_edges(3, []))

    def test_chordal_examples(self):
        assert not is_chordal(Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1)]))
        assert is_chordal(Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)]))
        assert is_chordal(Graph.from_edges(4, list(combinations(range(1, 5), 2))))

    def test_split_partition_fails_for_bipartite(self):
        assert not check_split_partition(reduce_bipartite(P3))


class TestDispatch(unittest.TestCase):
    def test_variants(self):
        assert build_reduction(K2, "split").variant == "split"
        assert build_reduction(K2, "bipartite").variant == "bipartite"
        with self.assertRaises(PairdomInputError):
            build_reduction(K2, "chordal")

    def test_edgeless(self):
        for variant in ["bipartite", "split"]:
            with self.assertRaises(InstanceError):
                build_reduction(Graph.from_edges(3, []), variant)
