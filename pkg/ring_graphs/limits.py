"""Size caps shared by the ring, graph and theorem layers."""

from dataclasses import dataclass

from config import DOMINATION_VERTEX_CAP, IDEAL_COUNT_CAP, ISOMORPHISM_VERTEX_CAP, ORACLE_ORDER_CAP

from .errors import CapExceededError


@dataclass(frozen=True)
class Limits:
    """Immutable bundle of the size caps.

    Attributes:
        ideal_count (int): Maximum number of ideals ``enumerate_ideals`` may produce.
        oracle_order (int): Maximum ring order accepted by element-level oracles.
        domination_vertices (int): Maximum vertex count for the exact domination number.
        isomorphism_vertices (int): Maximum vertex count for the isomorphism search.
    """

    ideal_count: int = IDEAL_COUNT_CAP
    oracle_order: int = ORACLE_ORDER_CAP
    domination_vertices: int = DOMINATION_VERTEX_CAP
    isomorphism_vertices: int = ISOMORPHISM_VERTEX_CAP

    def check(self, cap_name: str, value: int) -> None:
        """Raise if ``value`` is above the cap called ``cap_name``.

        Args:
            cap_name (str): One of the field names of this class.
            value (int): Value to compare with the cap.

        Raises:
            CapExceededError: If the value is above the cap.
        """
        limit = getattr(self, cap_name)
        if value > limit:
            raise CapExceededError(cap_name, limit, value)


DEFAULT_LIMITS = Limits()
