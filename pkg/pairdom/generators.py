# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

""" Seeded instance generators. Only integer draws from random.Random are
    used, so an identical spec produces an identical instance everywhere.
"""

from dataclasses import dataclass
from itertools import combinations
import logging
import random
from typing import Iterator, List, Optional, Union

from pairdom.block import is_block_graph
from pairdom.common.errors import PairdomInputError
from pairdom.common.graph import Graph, Pair, serialize_graph
from pairdom.interval import IntervalRep, serialize_intervals

KIND_TREE = "tree"
KIND_BLOCK = "block"
KIND_INTERVAL = "interval"
KIND_VC_SOURCE = "vc-source"
KINDS = (KIND_TREE, KIND_BLOCK, KIND_INTERVAL, KIND_VC_SOURCE)


@dataclass(frozen=True)
class GeneratorSpec:  # pylint: disable=too-many-instance-attributes
    """ Everything that determines a generated instance """
    kind: str
    n: int
    seed: int = 0
    max_clique: int = 4
    endpoint_range: Optional[int] = None
    max_length: int = 6
    bridge_gaps: bool = False
    extra_edges: Optional[int] = None
    attempts: int = 1000

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise PairdomInputError(f"unknown instance kind {self.kind!r},"
                                    f" expected one of {', '.join(KINDS)}")
        if self.n < 2:
            raise PairdomInputError(f"generated instances need at least two vertices, not {self.n}")
        if self.max_clique < 2:
            raise PairdomInputError(f"max_clique must be at least 2, not {self.max_clique}")
        if self.endpoint_range is not None and self.endpoint_range < 0:
            raise PairdomInputError("endpoint_range cannot be negative")
        if self.max_length < 0:
            raise PairdomInputError("max_length cannot be negative")
        if self.extra_edges is not None and self.extra_edges < 0:
            raise PairdomInputError("extra_edges cannot be negative")
        if self.attempts < 1:
            raise PairdomInputError("attempts must be positive")

    def rng(self) -> random.Random:
        return random.Random(self.seed)


def _relabel(n: int, edges: List[Pair], rng: random.Random) -> Graph:
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    return Graph.from_edges(n, ((labels[u - 1], labels[v - 1]) for u, v in edges))


def _attachment_edges(n: int, rng: random.Random) -> List[Pair]:
    return [(rng.randint(1, vertex - 1), vertex) for vertex in range(2, n + 1)]


def random_tree(spec: GeneratorSpec) -> Graph:
    """ A random attachment tree: each vertex joins a uniformly chosen earlier
        one, then the labels are shuffled
    """
    rng = spec.rng()
    return _relabel(spec.n, _attachment_edges(spec.n, rng), rng)


def random_block_graph(spec: GeneratorSpec) -> Graph:
    """ A random tree of cliques: each new clique of 2..max_clique vertices
        shares exactly one vertex, chosen uniformly, with the graph so far
    """
    rng = spec.rng()
    edges: List[Pair] = []
    count = 1
    while count < spec.n:
        anchor = rng.randint(1, count)
        size = rng.randint(2, min(spec.max_clique, spec.n - count + 1))
        block = [anchor] + list(range(count + 1, count + size))
        edges.extend(combinations(block, 2))
        count += size - 1
    graph = _relabel(spec.n, edges, rng)
    assert is_block_graph(graph), "generated graph is not a block graph"
    return graph


def _draw_intervals(spec: GeneratorSpec, rng: random.Random) -> List[List[int]]:
    limit = spec.endpoint_range if spec.endpoint_range is not None else spec.n
    endpoints = []
    for _ in range(spec.n):
        start = rng.randint(0, limit)
        endpoints.append([start, start + rng.randint(0, spec.max_length)])
    return endpoints


def _gaps_bridged(endpoints: List[List[int]], stretch: bool) -> bool:
    """ Whether the intervals cover a single connected stretch. With stretch
        set, every gap is closed by extending the interval reaching furthest
        before it, and True is returned.
    """
    order = sorted(range(len(endpoints)), key=lambda i: (endpoints[i][0], endpoints[i][1]))
    furthest = order[0]
    for index in order[1:]:
        start, end = endpoints[index]
        if start > endpoints[furthest][1]:
            if not stretch:
                return False
            endpoints[furthest][1] = start
        if end > endpoints[furthest][1]:
            furthest = index
    return True


def random_intervals(spec: GeneratorSpec) -> IntervalRep:
    """ n random integer intervals with left endpoints in 0..endpoint_range
        and lengths in 0..max_length, redrawn until their intersection graph is
        connected, or stretched across gaps when bridge_gaps is set
    """
    rng = spec.rng()
    for attempt in range(1, spec.attempts + 1):
        endpoints = _draw_intervals(spec, rng)
        if _gaps_bridged(endpoints, spec.bridge_gaps):
            logging.debug("connected interval family drawn on attempt %d", attempt)
            return IntervalRep.from_endpoints((a, b) for a, b in endpoints)
    raise PairdomInputError(f"no connected interval family of size {spec.n} found in"
                            f" {spec.attempts} attempts; widen max_length or set bridge_gaps")


def random_vc_source(spec: GeneratorSpec) -> Graph:
    """ A random connected graph: an attachment tree plus extra_edges further
        edges (n // 2 by default, capped at the number of missing edges)
    """
    rng = spec.rng()
    edges = _attachment_edges(spec.n, rng)
    present = set(edges)
    wanted = spec.extra_edges if spec.extra_edges is not None else spec.n // 2
    wanted = min(wanted, spec.n * (spec.n - 1) // 2 - len(edges))
    added = 0
    while added < wanted:
        u, v = rng.randint(1, spec.n), rng.randint(1, spec.n)
        key = (min(u, v), max(u, v))
        if u == v or key in present:
            continue
        present.add(key)
        edges.append(key)
        added += 1
    return _relabel(spec.n, edges, rng)


def generate(spec: GeneratorSpec) -> Union[Graph, IntervalRep]:
    """ Builds the instance a spec describes """
    if spec.kind == KIND_TREE:
        return random_tree(spec)
    if spec.kind == KIND_BLOCK:
        return random_block_graph(spec)
    if spec.kind == KIND_INTERVAL:
        return random_intervals(spec)
    return random_vc_source(spec)


def generate_text(spec: GeneratorSpec) -> str:
    """ The generated instance in its file format: intervals for the interval
        kind, the edge list format otherwise
    """
    instance = generate(spec)
    if isinstance(instance, IntervalRep):
        return serialize_intervals(instance)
    return serialize_graph(instance)


def all_connected_graphs(n: int) -> Iterator[Graph]:
    """ Every connected labelled graph on vertices 1..n, edge sets in binary order """
    possible = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(possible)):
        graph = Graph.from_edges(n, (edge for bit, edge in enumerate(possible) if mask >> bit & 1))
        if graph.is_connected():
            yield graph
