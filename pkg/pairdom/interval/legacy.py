# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

""" A literal rendition of the earlier right-endpoint recursion for paired
    domination on interval graphs. It is not always minimum: the built-in
    counterexample instance makes it return four vertices where two suffice.
    It is kept to reproduce that defect, with its full parameter table and
    recursion trace.
"""

from bisect import bisect_left
from dataclasses import dataclass
import logging
from typing import Any, Dict, List, Sequence, Tuple

from pairdom.common.graph import Graph

from .representation import Interval, IntervalRep, intersection_edges


@dataclass(frozen=True)
class ParameterRow:
    """ One row of the parameter table, for the interval at sorted position i """
    i: int
    interval_id: int
    a: int
    b: int
    max_a_ifb: int
    closest: int
    left_set: Tuple[int, ...]

    def to_json(self) -> Dict[str, Any]:
        return {
            "i": self.i,
            "id": self.interval_id,
            "a": self.a,
            "b": self.b,
            "max_a_ifb": self.max_a_ifb,
            "l": self.closest,
            "A": list(self.left_set),
        }


@dataclass(frozen=True)
class RecursionStep:
    """ MPD(j) = {l_j, j} + MPD(k), with k found from max a(IFB(reach)) """
    j: int
    head: Tuple[int, ...]
    reach: int
    max_a_ifb: int
    k: int
    members: Tuple[int, ...]

    def to_json(self) -> Dict[str, Any]:
        return {
            "j": self.j,
            "head": list(self.head),
            "reach": self.reach,
            "max_a_ifb": self.max_a_ifb,
            "k": self.k,
            "mpd": list(self.members),
        }


@dataclass(frozen=True)
class LegacyMpdState:
    """ Everything the legacy algorithm computes on an instance.

        Positions 1..n are the input intervals sorted by right endpoint;
        positions n + 1 and n + 2 are the two appended intervals. `original`
        maps positions back to input ids.
    """
    n: int
    rows: Tuple[ParameterRow, ...]
    steps: Tuple[RecursionStep, ...]
    original: Tuple[int, ...]

    @property
    def final_positions(self) -> Tuple[int, ...]:
        """ MPD(n + 2) in the order the recursion assembled it """
        return self.steps[-1].members

    @property
    def result(self) -> Tuple[int, ...]:
        """ The returned vertex set as input ids, ascending, appended intervals dropped """
        return tuple(sorted(self.original[position] for position in self.final_positions
                            if position <= self.n))

    def to_json(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "table": [row.to_json() for row in self.rows],
            "trace": [step.to_json() for step in self.steps],
            "result": list(self.result),
        }

    def render_table(self) -> str:
        """ The parameter table as aligned text, one row per interval """
        lines = ["i\ta_i\tb_i\tmax a(IFB(a_i))\tl_i\tA_i"]
        for row in self.rows:
            lines.append(f"{row.i}\t{row.a}\t{row.b}\t{row.max_a_ifb}\t{row.closest}\t"
                         f"{_format_set(row.left_set)}")
        return "\n".join(lines)

    def render_trace(self) -> str:
        """ The recursion, one MPD(j) line per position """
        lines = []
        for step in self.steps:
            tail = f" + MPD({step.k})" if step.k else ""
            lines.append(f"j={step.j}: max a(IFB({step.reach})) = {step.max_a_ifb}, k = {step.k};"
                         f" MPD({step.j}) = {_format_set(step.head)}{tail}"
                         f" = {_format_set(step.members)}")
        return "\n".join(lines)


def _format_set(values: Sequence[int]) -> str:
    if not values:
        return "{}"
    return "{" + ",".join(str(value) for value in values) + "}"


def _augment(rep: IntervalRep) -> Tuple[IntervalRep, Tuple[int, ...]]:
    """ Sorts by right endpoint and appends two mutually intersecting intervals
        beyond every input endpoint.
    """
    ordered = sorted(rep.intervals, key=lambda iv: (iv.b, iv.a, iv.id))
    base = max([2 * rep.n] + [iv.b for iv in rep.intervals])
    endpoints = [(iv.a, iv.b) for iv in ordered]
    endpoints.append((base + 1, base + 3))
    endpoints.append((base + 2, base + 4))
    original = (0,) + tuple(iv.id for iv in ordered)
    return IntervalRep.from_endpoints(endpoints), original


def _closest_left(graph: Graph, intervals: Sequence[Interval], position: int) -> int:
    best = position
    for other in graph.neighbours(position):
        if best == position or intervals[other - 1].a < intervals[best - 1].a:
            best = other
    return best


def legacy_mpd_trace(rep: IntervalRep) -> LegacyMpdState:
    """ Runs the legacy recursion on an interval family, recording its state.

        With intervals sorted by right endpoint and two intervals appended:
        IFB(e) holds the intervals ending strictly before e, with max a of an
        empty family being 0; l_j is the intersecting interval with the
        smallest left endpoint; A_i = {a_j : b_(i-1) < a_j < b_i} with b_0 = 0
        for the input intervals. Then MPD(j) = {l_j, j} + MPD(k), where the
        value max a(IFB(min(a_j, a_(l_j)))) lies in A_k, and MPD(0) is empty.

        Arguments:
            rep: any interval family

        Returns:
            the LegacyMpdState
    """
    augmented, original = _augment(rep)
    intervals = augmented.intervals
    total = augmented.n
    n = rep.n
    graph = Graph.from_edges(total, intersection_edges(augmented))

    rights = [iv.b for iv in intervals]
    prefix_max_a = [0]
    for interval in intervals:
        prefix_max_a.append(max(prefix_max_a[-1], interval.a))

    def max_a_ifb(end: int) -> int:
        return prefix_max_a[bisect_left(rights, end)]

    lefts = sorted({iv.a for iv in intervals})
    left_sets: List[Tuple[int, ...]] = []
    for position in range(1, total + 1):
        if position > n:
            left_sets.append(())
            continue
        lower = rights[position - 2] if position > 1 else 0
        upper = rights[position - 1]
        left_sets.append(tuple(lefts[bisect_left(lefts, lower + 1):bisect_left(lefts, upper)]))
    owner: Dict[int, int] = {}
    for position, values in enumerate(left_sets, start=1):
        for value in values:
            owner.setdefault(value, position)

    def find_k(value: int, any_before: bool) -> int:
        if not any_before:
            return 0
        if value in owner:
            return owner[value]
        return bisect_left(rights, value) + 1

    rows = []
    closest = [0]
    for position, interval in enumerate(intervals, start=1):
        closest.append(_closest_left(graph, intervals, position))
        rows.append(ParameterRow(position, original[position] if position <= n else position,
                                 interval.a, interval.b, max_a_ifb(interval.a),
                                 closest[position], left_sets[position - 1]))

    members: List[Tuple[int, ...]] = [()]
    steps = []
    for position, interval in enumerate(intervals, start=1):
        partner = closest[position]
        reach = min(interval.a, intervals[partner - 1].a)
        value = max_a_ifb(reach)
        k = find_k(value, bisect_left(rights, reach) > 0)
        assert k < position, f"recursion at {position} refers forward to {k}"
        head = tuple(sorted({partner, position}))
        assembled = list(head)
        assembled.extend(member for member in members[k] if member not in assembled)
        members.append(tuple(assembled))
        steps.append(RecursionStep(position, head, reach, value, k, tuple(assembled)))

    state = LegacyMpdState(n, tuple(rows), tuple(steps), original)
    logging.debug("legacy recursion returned %s", state.result)
    return state


def legacy_mpd(rep: IntervalRep) -> Tuple[int, ...]:
    """ The vertex set the legacy algorithm returns, as ascending input ids """
    return legacy_mpd_trace(rep).result
