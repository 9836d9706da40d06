import pytest

from ring_graphs.ring import Ideal, RingSpec


def cyclic_ideals(n, *gens):
    """Ideals ``<d>`` of ``Z_n``."""
    ring = RingSpec.cyclic(n)
    return [ring.ideal(d) for d in gens]


def edge_set(pairs):
    return {frozenset(pair) for pair in pairs}


def cyclic_edges(n, pairs):
    ring = RingSpec.cyclic(n)
    return {frozenset((ring.ideal(a), ring.ideal(b))) for a, b in pairs}


@pytest.fixture
def labels():
    """Eight throwaway vertex labels for hand-built graphs."""
    return [Ideal((d,)) for d in range(1, 9)]
