"""Builders for the second ideal intersection graph, the prime ideal sum graph and the intersection graph.

Each builder enumerates the non-zero proper ideals of a ring and tests every
unordered pair with the graph's edge predicate. The predicates come either from
the closed forms in `ring_graphs.ring` or from its element-level oracles.
"""

import logging
from functools import cache, partial
from itertools import combinations
from typing import Callable

from constant import GraphKind, PredicateMethod

from .errors import NoVerticesError
from .graph import IdealGraph
from .limits import DEFAULT_LIMITS, Limits
from .ring import (
    Ideal,
    RingSpec,
    ideal_sum,
    intersect,
    intersect_oracle,
    is_prime_ideal,
    is_prime_ideal_oracle,
    is_second,
    is_second_oracle,
    sum_oracle,
    vertices,
)

logger = logging.getLogger(__name__)

EdgePredicate = Callable[[Ideal, Ideal], bool]


def edge_predicate(ring: RingSpec, kind: GraphKind, method: PredicateMethod, limits: Limits) -> EdgePredicate:
    """Adjacency test for one graph kind on one ring.

    Args:
        ring (RingSpec): The ring.
        kind (GraphKind): SII (intersection is second), PIS (sum is prime) or GAMMA
            (intersection is non-zero).
        method (PredicateMethod): Closed forms or element-level oracles.
        limits (Limits): Caps for the oracle path.

    Returns:
        EdgePredicate: ``(I, J) -> bool``.
    """
    zero = ring.zero
    if method is PredicateMethod.ORACLE:
        limits.check("oracle_order", ring.order)
        meet = partial(intersect_oracle, ring, limits=limits)
        join = partial(sum_oracle, ring, limits=limits)
        second = cache(partial(is_second_oracle, ring, limits=limits))
        prime = cache(partial(is_prime_ideal_oracle, ring, limits=limits))
    else:
        meet = partial(intersect, ring)
        join = partial(ideal_sum, ring)
        second = partial(is_second, ring)
        prime = partial(is_prime_ideal, ring)

    if kind is GraphKind.SII:
        return lambda a, b: second(meet(a, b))
    if kind is GraphKind.PIS:
        return lambda a, b: prime(join(a, b))
    return lambda a, b: meet(a, b) != zero


def build_graph(
    ring: RingSpec,
    kind: GraphKind,
    method: PredicateMethod = PredicateMethod.FAST,
    limits: Limits = DEFAULT_LIMITS,
) -> IdealGraph:
    """Build one ideal graph of a ring.

    Args:
        ring (RingSpec): The ring.
        kind (GraphKind): Which graph to build.
        method (PredicateMethod): Predicate implementation. Defaults to the closed forms.
        limits (Limits): Size caps.

    Returns:
        IdealGraph: Vertices are the non-zero proper ideals in enumeration order.

    Raises:
        NoVerticesError: If the ring is a field.
        CapExceededError: If the ideal lattice or, on the oracle path, the ring order is above its cap.
    """
    labels = vertices(ring, limits)
    if not labels:
        raise NoVerticesError(f"Ring {ring} has no non-zero proper ideals.")

    adjacent = edge_predicate(ring, kind, method, limits)
    edges = [(i, j) for i, j in combinations(range(len(labels)), 2) if adjacent(labels[i], labels[j])]
    graph = IdealGraph(kind, labels, edges)
    logger.debug("Built %s(%s) with %s predicates: %s", kind.value, ring, method.value, graph.summary())
    return graph


def build_sii(
    ring: RingSpec, method: PredicateMethod = PredicateMethod.FAST, limits: Limits = DEFAULT_LIMITS
) -> IdealGraph:
    """Second ideal intersection graph: ``I -- J`` iff ``I ∩ J`` is second."""
    return build_graph(ring, GraphKind.SII, method, limits)


def build_pis(
    ring: RingSpec, method: PredicateMethod = PredicateMethod.FAST, limits: Limits = DEFAULT_LIMITS
) -> IdealGraph:
    """Prime ideal sum graph: ``I -- J`` iff ``I + J`` is prime."""
    return build_graph(ring, GraphKind.PIS, method, limits)


def build_gamma(
    ring: RingSpec, method: PredicateMethod = PredicateMethod.FAST, limits: Limits = DEFAULT_LIMITS
) -> IdealGraph:
    """Intersection graph: ``I -- J`` iff ``I ∩ J`` is non-zero."""
    return build_graph(ring, GraphKind.GAMMA, method, limits)
