"""Graph isomorphism: checking an explicit vertex map and searching for one."""

import logging
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Tuple

from ..errors import DomainError
from ..limits import DEFAULT_LIMITS, Limits
from ..ring import Ideal
from ._ideal_graph import IdealGraph

logger = logging.getLogger(__name__)

VertexMap = Mapping[Ideal, Ideal]


def _check_bijection(first: IdealGraph, second: IdealGraph, mapping: VertexMap) -> None:
    if set(mapping) != set(first.vertices):
        raise DomainError("Vertex map must be defined on every vertex of the source graph.")
    images = list(mapping.values())
    if len(set(images)) != len(images) or set(images) != set(second.vertices):
        raise DomainError("Vertex map must be a bijection onto the target graph's vertices.")


def isomorphism_violation(
    first: IdealGraph, second: IdealGraph, mapping: VertexMap
) -> Optional[Tuple[Ideal, Ideal]]:
    """First vertex pair whose adjacency is not preserved by ``mapping``.

    Returns:
        Optional[Tuple[Ideal, Ideal]]: The offending pair of source vertices, or ``None``
        when the map is an isomorphism.

    Raises:
        DomainError: If ``mapping`` is not a bijection between the vertex sets.
    """
    _check_bijection(first, second, mapping)
    for a, b in combinations(first.vertices, 2):
        if first.are_adjacent(a, b) != second.are_adjacent(mapping[a], mapping[b]):
            return a, b
    return None


def verify_map_isomorphism(first: IdealGraph, second: IdealGraph, mapping: VertexMap) -> bool:
    """Whether ``mapping`` preserves adjacency and non-adjacency in both directions.

    Raises:
        DomainError: If ``mapping`` is not a bijection between the vertex sets.
    """
    return isomorphism_violation(first, second, mapping) is None


def _signature_colors(first: IdealGraph, second: IdealGraph) -> Tuple[List[int], List[int]]:
    """Colour vertices by (degree, sorted neighbour degrees), shared between both graphs."""

    def signatures(graph: IdealGraph) -> List[Tuple[int, Tuple[int, ...]]]:
        degrees = [len(adj) for adj in graph.neighbor_sets]
        return [(degrees[i], tuple(sorted(degrees[j] for j in adj))) for i, adj in enumerate(graph.neighbor_sets)]

    first_signatures, second_signatures = signatures(first), signatures(second)
    shared = sorted(set(first_signatures) | set(second_signatures))
    palette = {signature: color for color, signature in enumerate(shared)}
    return [palette[s] for s in first_signatures], [palette[s] for s in second_signatures]


def find_isomorphism(
    first: IdealGraph, second: IdealGraph, limits: Limits = DEFAULT_LIMITS
) -> Optional[Dict[Ideal, Ideal]]:
    """Search for an isomorphism and return it as a witness map.

    Cheap invariants (vertex and edge counts, degree sequences) reject first; the
    search itself is igraph's VF2 restricted to vertices with equal degree signatures.

    Returns:
        Optional[Dict[Ideal, Ideal]]: A vertex bijection preserving adjacency, or ``None``.

    Raises:
        CapExceededError: If either graph is above the isomorphism cap.
    """
    limits.check("isomorphism_vertices", max(first.vertex_count, second.vertex_count))
    if first.vertex_count != second.vertex_count or first.edge_count != second.edge_count:
        return None
    if first.degree_sequence() != second.degree_sequence():
        return None
    if first.vertex_count == 0:
        return {}

    first_colors, second_colors = _signature_colors(first, second)
    if sorted(first_colors) != sorted(second_colors):
        return None

    isomorphic, mapping_12, _ = first.graph.isomorphic_vf2(
        second.graph, color1=first_colors, color2=second_colors, return_mapping_12=True
    )
    if not isomorphic:
        return None
    logger.debug("Isomorphism found between %r and %r", first, second)
    return {first.vertices[i]: second.vertices[j] for i, j in enumerate(mapping_12)}
