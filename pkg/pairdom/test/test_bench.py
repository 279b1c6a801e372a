# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

# for test files, silence irrelevant and noisy pylint warnings
# pylint: disable=no-self-use,protected-access,missing-docstring

import os
import unittest

from pairdom.bench import parse_sizes, run_bench, time_solver
from pairdom.common.errors import PairdomInputError

QUICK_BENCH_ENV = "PAIRDOM_QUICK_BENCH"


class TestSizes(unittest.TestCase):
    def test_parse(self):
        assert parse_sizes("1e4,1e5") == [10000, 100000]
        assert parse_sizes("10, 20 ,30") == [10, 20, 30]

    def test_invalid(self):
        for text in ["", ",", "x", "1.5", "1", "20,10", "10,10"]:
            with self.assertRaises(PairdomInputError):
                parse_sizes(text)


class TestRuns(unittest.TestCase):
    def test_rows(self):
        report = run_bench(["tree", "interval"], [50, 100], seed=3)
        assert [(row.kind, row.n) for row in report.rows] == [
            ("tree", 50), ("tree", 100), ("interval", 50), ("interval", 100)]
        assert report.rows[0].ratio is None
        assert report.rows[2].ratio is None
        for row in report.rows:
            assert row.size % 2 == 0
            assert row.m >= row.n - 1

    def test_text(self):
        lines = run_bench(["block"], [30], seed=1).render_text().split("\n")
        assert lines[0] == "kind\tsolver\tn\tm\tseconds\tratio"
        assert lines[1].startswith("block\tmpdb\t30\t")
        assert lines[1].endswith("\t-")

    def test_invalid(self):
        with self.assertRaises(PairdomInputError):
            run_bench(["vc-source"], [10])
        with self.assertRaises(PairdomInputError):
            run_bench([], [10])
        with self.assertRaises(PairdomInputError):
            run_bench(["tree"], [])
        with self.assertRaises(PairdomInputError):
            time_solver("chordal", 10)


class TestScaling(unittest.TestCase):
    def check_linear(self, kind):
        sizes = [10 ** 5, 10 ** 6]
        if os.environ.get(QUICK_BENCH_ENV) == "1":
            sizes = [10 ** 4, 10 ** 5]
        report = run_bench([kind], sizes)
        small, large = report.rows
        assert small.seconds < 5 and large.seconds < 5, report.render_text()
        assert large.ratio is not None and large.ratio <= 20, report.render_text()

    def test_tree(self):
        self.check_linear("tree")

    def test_block(self):
        self.check_linear("block")

    def test_interval(self):
        self.check_linear("interval")
