import math
from dataclasses import dataclass
from typing import Collection, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import igraph as ig

from constant import INFINITY, ExtendedInt, GraphKind

from ..common_utils import extended_to_json
from ..errors import DomainError
from ..limits import DEFAULT_LIMITS, Limits
from ..ring import Ideal
from . import _domination


class IdealGraph:
    """An undirected simple graph whose vertices are ideals of one ring.

    The edges live in an `igraph.Graph`; vertex ``i`` of the igraph graph carries the
    ideal ``vertices[i]`` and its rendered name. The graph is not modified after
    construction, so adjacency sets and degrees are computed once.

    Attributes:
        kind (GraphKind): Which ideal graph this is.
        vertices (Tuple[Ideal, ...]): Vertex labels in enumeration order.
        graph (igraph.Graph): The underlying undirected igraph graph.

    Args:
        kind (GraphKind): Graph kind tag.
        vertices (Sequence[Ideal]): Unique vertex labels.
        edges (Iterable[Tuple[int, int]]): Edges as pairs of vertex indices.

    Raises:
        DomainError: On duplicate labels, self-edges or out-of-range indices.
    """

    def __init__(self, kind: GraphKind, vertices: Sequence[Ideal], edges: Iterable[Tuple[int, int]] = ()):
        self.kind = kind
        self.vertices = tuple(vertices)
        self._index: Dict[Ideal, int] = {ideal: i for i, ideal in enumerate(self.vertices)}
        if len(self._index) != len(self.vertices):
            raise DomainError("Vertex labels must be unique.")

        pairs = set()
        for i, j in edges:
            if not (0 <= i < len(self.vertices) and 0 <= j < len(self.vertices)):
                raise DomainError(f"Edge ({i}, {j}) references an unknown vertex.")
            if i == j:
                raise DomainError(f"Self-edge on {self.vertices[i]} is not allowed.")
            pairs.add((min(i, j), max(i, j)))

        self.graph = ig.Graph(n=len(self.vertices), edges=sorted(pairs), directed=False)
        self.graph.vs["name"] = [ideal.render() for ideal in self.vertices]
        self._neighbors: Tuple[FrozenSet[int], ...] = tuple(frozenset(adj) for adj in self.graph.get_adjlist())

    def __repr__(self) -> str:
        return f"IdealGraph(kind={self.kind.value}, vertices={self.vertex_count}, edges={self.edge_count})"

    @property
    def vertex_count(self) -> int:
        """int: Number of vertices."""
        return self.graph.vcount()

    @property
    def edge_count(self) -> int:
        """int: Number of edges."""
        return self.graph.ecount()

    @property
    def neighbor_sets(self) -> Tuple[FrozenSet[int], ...]:
        """Tuple[FrozenSet[int], ...]: Open neighbourhoods by vertex index."""
        return self._neighbors

    def summary(self) -> str:
        """Return the igraph summary line of the graph."""
        return self.graph.summary()

    def index_of(self, ideal: Ideal) -> int:
        """Vertex index of ``ideal``.

        Raises:
            DomainError: If the ideal is not a vertex of this graph.
        """
        try:
            return self._index[ideal]
        except KeyError:
            raise DomainError(f"{ideal} is not a vertex of this {self.kind.value} graph.") from None

    def edge_index_pairs(self) -> List[Tuple[int, int]]:
        """Edges as ascending index pairs, sorted."""
        return sorted((min(e.tuple), max(e.tuple)) for e in self.graph.es)

    def edges(self) -> List[Tuple[Ideal, Ideal]]:
        """Edges as ideal pairs, ordered by vertex index."""
        return [(self.vertices[i], self.vertices[j]) for i, j in self.edge_index_pairs()]

    def are_adjacent(self, first: Ideal, second: Ideal) -> bool:
        """Whether two vertices share an edge."""
        return self.index_of(second) in self._neighbors[self.index_of(first)]

    def neighbors(self, ideal: Ideal) -> List[Ideal]:
        """Neighbours of a vertex in vertex order."""
        return [self.vertices[j] for j in sorted(self._neighbors[self.index_of(ideal)])]

    def degree(self, ideal: Ideal) -> int:
        """Degree of a vertex."""
        return len(self._neighbors[self.index_of(ideal)])

    def degree_sequence(self) -> List[int]:
        """Vertex degrees, non-increasing."""
        return sorted(self.graph.degree(), reverse=True)

    # Distances

    def distance(self, first: Ideal, second: Ideal) -> ExtendedInt:
        """Shortest-path length between two vertices.

        Returns:
            ExtendedInt: Number of edges on a shortest path, or ``INFINITY`` when
            the vertices lie in different components.

        Raises:
            DomainError: If either ideal is not a vertex.
        """
        source, target = self.index_of(first), self.index_of(second)
        length = self.graph.distances(source=source, target=target)[0][0]
        return INFINITY if math.isinf(length) else int(length)

    def _require_vertices(self, operation: str) -> None:
        if self.vertex_count == 0:
            raise DomainError(f"{operation} is undefined on a graph without vertices.")

    def is_connected(self) -> bool:
        """Whether the graph is connected. A single vertex is connected.

        Raises:
            DomainError: If the graph has no vertices.
        """
        self._require_vertices("Connectivity")
        return self.graph.is_connected()

    def diameter(self) -> ExtendedInt:
        """Largest pairwise distance; 0 for one vertex, ``INFINITY`` when disconnected.

        Raises:
            DomainError: If the graph has no vertices.
        """
        self._require_vertices("Diameter")
        if not self.graph.is_connected():
            return INFINITY
        if self.vertex_count == 1:
            return 0
        return int(self.graph.diameter(directed=False))

    def girth(self) -> ExtendedInt:
        """Length of a shortest cycle, ``INFINITY`` for forests."""
        if self.edge_count < 3:
            return INFINITY
        length = self.graph.girth()
        if not length or math.isinf(length) or math.isnan(length):
            return INFINITY
        return int(length)

    def has_triangle(self) -> bool:
        """Direct triangle scan over the edges, independent of ``girth``."""
        return any(self._neighbors[i] & self._neighbors[j] for i, j in self.edge_index_pairs())

    # Degree-based predicates

    def is_eulerian(self) -> bool:
        """Whether the graph has an Euler circuit.

        Edgeless graphs are not Eulerian, and neither is any graph with an isolated
        vertex; otherwise the graph must be connected with every degree even.
        """
        if self.edge_count == 0:
            return False
        degrees = self.graph.degree()
        if any(d == 0 or d % 2 for d in degrees):
            return False
        return self.graph.is_connected()

    def is_complete(self) -> bool:
        """Every pair adjacent; a single vertex is complete."""
        n = self.vertex_count
        return self.edge_count == n * (n - 1) // 2

    def universal_vertices(self) -> List[Ideal]:
        """Vertices adjacent to every other vertex."""
        n = self.vertex_count
        return [ideal for i, ideal in enumerate(self.vertices) if len(self._neighbors[i]) == n - 1]

    def isolated_vertices(self) -> List[Ideal]:
        """Vertices of degree zero."""
        return [ideal for i, ideal in enumerate(self.vertices) if not self._neighbors[i]]

    # Domination

    def _indices(self, ideals: Collection[Ideal]) -> FrozenSet[int]:
        return frozenset(self.index_of(ideal) for ideal in ideals)

    def _dominates(self, members: FrozenSet[int]) -> bool:
        covered = set(members)
        for i in members:
            covered |= self._neighbors[i]
        return len(covered) == self.vertex_count

    def is_dominating_set(self, ideals: Collection[Ideal]) -> bool:
        """Whether every vertex is in ``ideals`` or adjacent to one of them.

        The empty set only dominates the empty graph.

        Raises:
            DomainError: If a member is not a vertex.
        """
        return self._dominates(self._indices(ideals))

    def is_minimal_dominating_set(self, ideals: Collection[Ideal]) -> bool:
        """A dominating set from which no single vertex can be dropped."""
        members = self._indices(ideals)
        if not self._dominates(members):
            return False
        return not any(self._dominates(members - {i}) for i in members)

    def minimum_dominating_set(self, limits: Limits = DEFAULT_LIMITS) -> List[Ideal]:
        """One dominating set of minimum size, in vertex order.

        Raises:
            CapExceededError: If the vertex count is above the domination cap.
        """
        limits.check("domination_vertices", self.vertex_count)
        return [self.vertices[i] for i in _domination.minimum_dominating_set(self._neighbors)]

    def domination_number(self, limits: Limits = DEFAULT_LIMITS) -> int:
        """Exact domination number.

        Raises:
            CapExceededError: If the vertex count is above the domination cap.
        """
        return len(self.minimum_dominating_set(limits))

    def invariants(self, limits: Limits = DEFAULT_LIMITS) -> "InvariantReport":
        """Compute every invariant of the graph.

        The domination number is left out, not raised, when the graph is above the
        domination cap.

        Raises:
            DomainError: If the graph has no vertices.
        """
        self._require_vertices("An invariant report")
        domination: Optional[int] = None
        if self.vertex_count <= limits.domination_vertices:
            domination = self.domination_number(limits)
        return InvariantReport(
            vertex_count=self.vertex_count,
            edge_count=self.edge_count,
            connected=self.is_connected(),
            diameter=self.diameter(),
            girth=self.girth(),
            eulerian=self.is_eulerian(),
            complete=self.is_complete(),
            universal_vertices=tuple(self.universal_vertices()),
            isolated_vertices=tuple(self.isolated_vertices()),
            degree_sequence=tuple(self.degree_sequence()),
            domination_number=domination,
        )


@dataclass(frozen=True)
class InvariantReport:
    """Invariants of one ideal graph.

    Attributes:
        vertex_count (int): Number of vertices.
        edge_count (int): Number of edges.
        connected (bool): Connectivity.
        diameter (ExtendedInt): Diameter, ``INFINITY`` when disconnected.
        girth (ExtendedInt): Girth, ``INFINITY`` when acyclic.
        eulerian (bool): Euler circuit exists.
        complete (bool): Complete graph.
        universal_vertices (Tuple[Ideal, ...]): Vertices adjacent to all others.
        isolated_vertices (Tuple[Ideal, ...]): Degree-zero vertices.
        degree_sequence (Tuple[int, ...]): Non-increasing degrees.
        domination_number (Optional[int]): ``None`` when above the domination cap.
    """

    vertex_count: int
    edge_count: int
    connected: bool
    diameter: ExtendedInt
    girth: ExtendedInt
    eulerian: bool
    complete: bool
    universal_vertices: Tuple[Ideal, ...]
    isolated_vertices: Tuple[Ideal, ...]
    degree_sequence: Tuple[int, ...]
    domination_number: Optional[int] = None

    @property
    def domination_status(self) -> str:
        """str: ``"computed"`` or ``"capped"``."""
        return "capped" if self.domination_number is None else "computed"

    def to_dict(self) -> dict:
        """JSON-ready mapping; infinity becomes ``None`` and a capped domination number is omitted."""
        data = {
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "connected": self.connected,
            "diameter": extended_to_json(self.diameter),
            "girth": extended_to_json(self.girth),
            "eulerian": self.eulerian,
            "complete": self.complete,
            "universal_vertices": [ideal.render() for ideal in self.universal_vertices],
            "isolated_vertices": [ideal.render() for ideal in self.isolated_vertices],
            "degree_sequence": list(self.degree_sequence),
            "domination_status": self.domination_status,
        }
        if self.domination_number is not None:
            data["domination_number"] = self.domination_number
        return data
