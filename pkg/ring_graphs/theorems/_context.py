from functools import cached_property
from typing import List, Optional

from constant import GraphKind

from ..arith import Factorization, factorize
from ..builders import build_graph
from ..graph import IdealGraph
from ..limits import DEFAULT_LIMITS, Limits
from ..ring import (
    Ideal,
    RingSpec,
    ideal_sum,
    is_contained,
    is_maximal,
    is_second,
    maximal_ideals,
    minimal_ideals,
    second_ideals,
    second_socle,
    vertices,
)


class RingContext:
    """Lazily computed facts about one ring, shared by every claim checked on it.

    Attributes:
        ring (RingSpec): The ring.
        limits (Limits): Size caps applied to every computation.
    """

    def __init__(self, ring: RingSpec, limits: Limits = DEFAULT_LIMITS):
        self.ring = ring
        self.limits = limits
        self._graphs = {}

    def graph(self, kind: GraphKind) -> IdealGraph:
        """Build (once) and return the ideal graph of ``kind``."""
        if kind not in self._graphs:
            self._graphs[kind] = build_graph(self.ring, kind, limits=self.limits)
        return self._graphs[kind]

    @property
    def sii(self) -> IdealGraph:
        return self.graph(GraphKind.SII)

    @property
    def pis(self) -> IdealGraph:
        return self.graph(GraphKind.PIS)

    @property
    def gamma(self) -> IdealGraph:
        return self.graph(GraphKind.GAMMA)

    @cached_property
    def vertices(self) -> List[Ideal]:
        return vertices(self.ring, self.limits)

    @property
    def has_vertices(self) -> bool:
        return bool(self.vertices)

    @cached_property
    def minimal(self) -> List[Ideal]:
        return minimal_ideals(self.ring)

    @cached_property
    def maximal(self) -> List[Ideal]:
        return maximal_ideals(self.ring)

    @cached_property
    def seconds(self) -> List[Ideal]:
        return second_ideals(self.ring, self.limits)

    @cached_property
    def socle(self) -> Ideal:
        return second_socle(self.ring, self.limits)

    @cached_property
    def factorization(self) -> Optional[Factorization]:
        """Factorization of ``n`` for ``Z_n``; ``None`` for products."""
        if not self.ring.is_cyclic:
            return None
        return factorize(self.ring.components[0])

    @cached_property
    def universal_configuration(self) -> bool:
        """One minimal ideal, or two whose sum is a maximal ideal with only second ideals strictly inside.

        This is the ideal-theoretic description of rings whose SII graph has a universal vertex.
        """
        if len(self.minimal) == 1:
            return True
        if len(self.minimal) != 2:
            return False
        total = ideal_sum(self.ring, *self.minimal)
        if total in (self.ring.zero, self.ring.unit) or not is_maximal(self.ring, total):
            return False
        return not any(
            ideal != total and is_contained(ideal, total) and not is_second(self.ring, ideal) for ideal in self.vertices
        )
