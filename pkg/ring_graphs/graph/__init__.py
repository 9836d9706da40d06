"""Ideal graphs and their invariants."""

from ._ideal_graph import IdealGraph, InvariantReport
from ._isomorphism import find_isomorphism, isomorphism_violation, verify_map_isomorphism

__all__ = [
    "IdealGraph",
    "InvariantReport",
    "find_isomorphism",
    "isomorphism_violation",
    "verify_map_isomorphism",
]
