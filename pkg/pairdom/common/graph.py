# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

""" Simple undirected graphs, paired solutions, and the validity predicates
    every solver output is checked against.

    Vertex ids are 1-based throughout, both in memory and in files.
"""

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

import networkx as nx

from .errors import PairdomInputError

Pair = Tuple[int, int]

REASON_OK = "ok"
REASON_NOT_DOMINATING = "not-dominating"
REASON_NOT_PARTITION = "not-partition"
REASON_NON_EDGE_PAIR = "non-edge-pair"


class Graph:
    """ An immutable simple undirected graph on vertices 1..n, stored as
        sorted adjacency tuples. Index 0 of the adjacency is always empty, and
        every edge is listed from both ends.
    """
    __slots__ = ("_n", "_m", "_adjacency")

    def __init__(self, n: int, adjacency: Sequence[Sequence[int]]) -> None:
        self._store(n, adjacency)
        self._check_simple()

    def _store(self, n: int, adjacency: Sequence[Sequence[int]]) -> None:
        if n < 0:
            raise PairdomInputError(f"vertex count cannot be negative: {n}")
        if len(adjacency) != n + 1:
            raise PairdomInputError(f"adjacency must have {n + 1} entries, not {len(adjacency)}")
        self._n = n
        self._adjacency: Tuple[Tuple[int, ...], ...] = tuple(tuple(sorted(neighbours))
                                                              for neighbours in adjacency)
        self._m = sum(len(neighbours) for neighbours in self._adjacency) // 2

    def _check_simple(self) -> None:
        """ Rejects adjacencies with self-loops, repeated or out of range
            neighbours, or an edge listed from one end only
        """
        if self._adjacency[0]:
            raise PairdomInputError("adjacency entry 0 must be empty")
        for vertex in range(1, self._n + 1):
            previous = 0
            for other in self._adjacency[vertex]:
                if not 1 <= other <= self._n:
                    raise PairdomInputError(f"vertex {vertex} has neighbour {other}"
                                            f" outside 1..{self._n}")
                if other == vertex:
                    raise PairdomInputError(f"self-loop at vertex {vertex}")
                if other == previous:
                    raise PairdomInputError(f"vertex {vertex} lists neighbour {other} twice")
                if not self.has_edge(other, vertex):
                    raise PairdomInputError(f"adjacency is not symmetric: {other} is a neighbour"
                                            f" of {vertex} but not the reverse")
                previous = other

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Pair]) -> "Graph":
        """ Constructs a graph from an edge list, rejecting self-loops, duplicate
            edges and out of range ids.

            Arguments:
                n: the number of vertices
                edges: pairs of vertex ids

            Returns:
                a new Graph
        """
        adjacency: List[List[int]] = [[] for _ in range(n + 1)]
        seen = set()
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise PairdomInputError(f"edge {u} {v} has a vertex outside 1..{n}")
            if u == v:
                raise PairdomInputError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise PairdomInputError(f"duplicate edge {key[0]} {key[1]}")
            seen.add(key)
            adjacency[u].append(v)
            adjacency[v].append(u)
        # every edge was added from both ends and checked above
        graph = cls.__new__(cls)
        graph._store(n, adjacency)
        return graph

    @property
    def n(self) -> int:
        """ The number of vertices """
        return self._n

    @property
    def m(self) -> int:
        """ The number of edges """
        return self._m

    @property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        """ The sorted neighbour tuples, indexed by vertex id """
        return self._adjacency

    def vertices(self) -> range:
        """ All vertex ids in ascending order """
        return range(1, self._n + 1)

    def neighbours(self, vertex: int) -> Tuple[int, ...]:
        """ The open neighbourhood N(v), ascending """
        return self._adjacency[vertex]

    def closed_neighbourhood(self, vertex: int) -> Tuple[int, ...]:
        """ The closed neighbourhood N[v], ascending """
        neighbours = self._adjacency[vertex]
        index = bisect_left(neighbours, vertex)
        return neighbours[:index] + (vertex,) + neighbours[index:]

    def degree(self, vertex: int) -> int:
        """ The number of neighbours of the vertex """
        return len(self._adjacency[vertex])

    def has_edge(self, u: int, v: int) -> bool:
        """ Whether u and v are adjacent """
        if not (1 <= u <= self._n and 1 <= v <= self._n):
            return False
        neighbours = self._adjacency[u]
        index = bisect_left(neighbours, v)
        return index < len(neighbours) and neighbours[index] == v

    def edges(self) -> Iterator[Pair]:
        """ All edges (u, v) with u < v, in ascending order """
        for u in range(1, self._n + 1):
            for v in self._adjacency[u]:
                if v > u:
                    yield (u, v)

    def is_clique(self, vertices: Iterable[int]) -> bool:
        """ Whether the given vertices are pairwise adjacent """
        members = sorted(set(vertices))
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                if not self.has_edge(u, v):
                    return False
        return True

    def induced_subgraph(self, vertices: Iterable[int]) -> Tuple["Graph", Tuple[int, ...]]:
        """ Builds G[S], relabelling the members of S to 1..|S| in ascending order.

            Arguments:
                vertices: the vertex set S

            Returns:
                a tuple of
                    the induced subgraph
                    the original ids, where entry i - 1 is the original of new vertex i
        """
        originals = tuple(sorted(set(vertices)))
        self.check_vertices(originals)
        new_ids = {old: new for new, old in enumerate(originals, start=1)}
        adjacency: List[List[int]] = [[]]
        for old in originals:
            adjacency.append([new_ids[other] for other in self._adjacency[old] if other in new_ids])
        return Graph(len(originals), adjacency), originals

    def is_connected(self) -> bool:
        """ Whether the graph is connected; the empty graph counts as connected """
        if self._n <= 1:
            return True
        seen = bytearray(self._n + 1)
        seen[1] = 1
        queue = deque([1])
        count = 1
        while queue:
            vertex = queue.popleft()
            for other in self._adjacency[vertex]:
                if not seen[other]:
                    seen[other] = 1
                    count += 1
                    queue.append(other)
        return count == self._n

    def isolated_vertices(self) -> List[int]:
        """ All vertices without neighbours """
        return [v for v in self.vertices() if not self._adjacency[v]]

    def to_networkx(self) -> nx.Graph:
        """ The same graph as a networkx.Graph on nodes 1..n """
        result = nx.Graph()
        result.add_nodes_from(self.vertices())
        result.add_edges_from(self.edges())
        return result

    def check_vertices(self, vertices: Iterable[int]) -> None:
        """ Raises a PairdomInputError if any of the given ids is not a vertex """
        for vertex in vertices:
            if not 1 <= vertex <= self._n:
                raise PairdomInputError(f"vertex {vertex} is outside 1..{self._n}")

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adjacency == other._adjacency

    def __hash__(self) -> int:
        return hash((self._n, self._adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


def parse_graph(text: str) -> Graph:
    """ Parses the edge list format: a header line "n m" followed by m lines
        "u v". Lines starting with '#' and blank lines are ignored.

        Arguments:
            text: the document contents

        Returns:
            the Graph described
    """
    header = None
    n = m = 0
    edges: List[Pair] = []
    seen = set()
    for line_number, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise PairdomInputError(f"line {line_number}: expected two integers, found {line!r}")
        try:
            first, second = int(parts[0]), int(parts[1])
        except ValueError as err:
            raise PairdomInputError(f"line {line_number}: expected two integers, found {line!r}") from err
        if header is None:
            if first < 0 or second < 0:
                raise PairdomInputError(f"line {line_number}: negative vertex or edge count")
            header = line_number
            n, m = first, second
            continue
        if len(edges) == m:
            raise PairdomInputError(f"line {line_number}: more than the {m} edges declared")
        if not (1 <= first <= n and 1 <= second <= n):
            raise PairdomInputError(f"line {line_number}: vertex id out of range 1..{n}")
        if first == second:
            raise PairdomInputError(f"line {line_number}: self-loop at vertex {first}")
        key = (first, second) if first < second else (second, first)
        if key in seen:
            raise PairdomInputError(f"line {line_number}: duplicate edge {key[0]} {key[1]}")
        seen.add(key)
        edges.append(key)
    if header is None:
        raise PairdomInputError("missing header line 'n m'")
    if len(edges) != m:
        raise PairdomInputError(f"expected {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def serialize_graph(graph: Graph) -> str:
    """ Writes the canonical edge list form of a graph, edges sorted """
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> Graph:
    """ Reads and parses a graph file """
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as err:
        raise PairdomInputError(f"cannot read graph file {path}: {err}") from err
    return parse_graph(text)


@dataclass(frozen=True)
class PairedSolution:
    """ A vertex set with an explicit pairing. Ordering is normalised on
        construction; validity against a graph is checked separately by
        verify_paired_dominating().
    """
    vertices: Tuple[int, ...]
    pairs: Tuple[Pair, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        pairs = tuple(sorted((min(pair), max(pair)) for pair in self.pairs))
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Pair]) -> "PairedSolution":
        """ Builds a solution whose vertex set is exactly the union of the pairs """
        pairs = list(pairs)
        vertices = [vertex for pair in pairs for vertex in pair]
        if len(set(vertices)) != len(vertices):
            raise PairdomInputError("a vertex appears in more than one pair")
        return cls(tuple(vertices), tuple(pairs))

    @property
    def size(self) -> int:
        """ The number of vertices in the solution """
        return len(self.vertices)

    def partner_of(self, vertex: int) -> int:
        """ The vertex paired with the given vertex """
        for u, v in self.pairs:
            if u == vertex:
                return v
            if v == vertex:
                return u
        raise KeyError(vertex)

    def to_json(self) -> Dict[str, Any]:
        return {
            "size": self.size,
            "vertices": list(self.vertices),
            "pairs": [list(pair) for pair in self.pairs],
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "PairedSolution":
        try:
            vertices = tuple(int(vertex) for vertex in data["vertices"])
            pairs = []
            for pair in data["pairs"]:
                if len(pair) != 2:
                    raise PairdomInputError(f"pair {pair} does not have two members")
                pairs.append((int(pair[0]), int(pair[1])))
        except (KeyError, TypeError, ValueError) as err:
            if isinstance(err, PairdomInputError):
                raise
            raise PairdomInputError(f"malformed solution JSON: {err}") from err
        solution = cls(vertices, tuple(pairs))
        if "size" in data and data["size"] != solution.size:
            raise PairdomInputError(f"solution size {data['size']} does not match its vertices")
        return solution


@dataclass(frozen=True)
class Verdict:
    """ The outcome of verifying a solution, with a machine-readable reason """
    valid: bool
    reason: str = REASON_OK
    detail: str = ""

    def __bool__(self) -> bool:
        return self.valid


def is_dominating(graph: Graph, vertices: Iterable[int]) -> bool:
    """ Whether every vertex of the graph is in the set or adjacent to a member of it.

        Arguments:
            graph: the host graph
            vertices: the candidate set

        Returns:
            True if the set dominates the graph
    """
    members = set(vertices)
    graph.check_vertices(members)
    dominated = bytearray(graph.n + 1)
    for vertex in members:
        dominated[vertex] = 1
        for other in graph.neighbours(vertex):
            dominated[other] = 1
    return all(dominated[v] for v in graph.vertices())


def undominated_vertices(graph: Graph, vertices: Iterable[int]) -> List[int]:
    """ The vertices neither in the set nor adjacent to a member """
    members = set(vertices)
    return [v for v in graph.vertices()
            if v not in members and not any(other in members for other in graph.neighbours(v))]


def is_vertex_cover(graph: Graph, vertices: Iterable[int]) -> bool:
    """ Whether every edge has at least one end in the set """
    members = set(vertices)
    graph.check_vertices(members)
    return all(u in members or v in members for u, v in graph.edges())


def verify_paired_dominating(graph: Graph, solution: PairedSolution) -> Verdict:
    """ Checks that a solution is a paired-dominating set of the graph: the pairs
        partition the vertex set, every pair is an edge, and the set dominates.
        Structural problems are reported through the verdict, never raised.

        Arguments:
            graph: the host graph
            solution: the solution to check

        Returns:
            a Verdict, truthy only if the solution is valid
    """
    members: FrozenSet[int] = frozenset(solution.vertices)
    if len(members) != len(solution.vertices):
        return Verdict(False, REASON_NOT_PARTITION, "a vertex is listed more than once")
    for vertex in members:
        if not 1 <= vertex <= graph.n:
            return Verdict(False, REASON_NOT_PARTITION, f"vertex {vertex} is not in the graph")
    paired = set()
    for u, v in solution.pairs:
        if u == v or u in paired or v in paired:
            return Verdict(False, REASON_NOT_PARTITION, f"pair ({u}, {v}) overlaps another pair")
        paired.add(u)
        paired.add(v)
    if paired != members:
        return Verdict(False, REASON_NOT_PARTITION, "pairs do not cover the vertex set exactly")
    for u, v in solution.pairs:
        if not graph.has_edge(u, v):
            return Verdict(False, REASON_NON_EDGE_PAIR, f"pair ({u}, {v}) is not an edge")
    missing = undominated_vertices(graph, members)
    if missing:
        return Verdict(False, REASON_NOT_DOMINATING,
                       f"undominated: {', '.join(map(str, missing[:10]))}")
    return Verdict(True)
