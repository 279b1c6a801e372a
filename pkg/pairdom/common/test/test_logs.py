# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

# for test files, silence irrelevant and noisy pylint warnings
# pylint: disable=no-self-use,protected-access,missing-docstring

import logging
import os
import tempfile
import unittest

from pairdom.common.logs import changed_logging


class TestChangedLogging(unittest.TestCase):
    def test_restores(self):
        root = logging.getLogger()
        handlers = list(root.handlers)
        level = root.level
        with changed_logging(verbose=True):
            assert root.handlers != handlers
            assert root.handlers[0].level == logging.INFO
        assert root.handlers == handlers
        assert root.level == level

    def test_levels(self):
        root = logging.getLogger()
        with changed_logging():
            assert root.handlers[0].level == logging.WARNING
        with changed_logging(verbose=True, debug=True):
            assert root.handlers[0].level == logging.DEBUG

    def test_logfile(self):
        with tempfile.TemporaryDirectory() as tempdir:
            path = os.path.join(tempdir, "run.log")
            with changed_logging(logfile=path):
                logging.debug("solver detail %d", 7)
            with open(path, encoding="utf-8") as handle:
                assert "solver detail 7" in handle.read()
