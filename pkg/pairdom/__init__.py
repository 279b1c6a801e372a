# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

"""
    Paired domination toolkit: linear-time solvers for trees, block graphs
    and interval graphs, an exhaustive oracle, and vertex cover reductions.

    The expected entry points as a library are the cmd_* functions.
"""

from pairdom.main import (
    __version__,
    RunReport,
    cmd_bench,
    cmd_counterexample,
    cmd_gen,
    cmd_oracle,
    cmd_reduce,
    cmd_solve,
    cmd_verify,
)
