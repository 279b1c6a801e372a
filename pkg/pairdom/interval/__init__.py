# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

""" Paired domination on interval graphs given by their interval representation """

from .legacy import LegacyMpdState, legacy_mpd, legacy_mpd_trace
from .mpdi import mpdi, solve_intervals
from .representation import (
    Interval,
    IntervalRep,
    LeftOrdering,
    check_left_ordering,
    interval_graph,
    load_counterexample,
    looks_like_intervals,
    parse_intervals,
    read_intervals,
    serialize_intervals,
)
