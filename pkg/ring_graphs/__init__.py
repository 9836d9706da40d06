"""Ideal graphs of finite commutative rings."""

from ring_graphs.builders import build_gamma, build_graph, build_pis, build_sii
from ring_graphs.errors import CapExceededError, DomainError, NoVerticesError, RingGraphError, UnknownClaimError
from ring_graphs.graph import IdealGraph, InvariantReport, find_isomorphism, verify_map_isomorphism
from ring_graphs.limits import DEFAULT_LIMITS, Limits
from ring_graphs.ring import Ideal, RingSpec
from ring_graphs.theorems import ClaimResult, SweepReport, sweep, verify_claim

__all__ = [
    "CapExceededError",
    "ClaimResult",
    "DEFAULT_LIMITS",
    "DomainError",
    "Ideal",
    "IdealGraph",
    "InvariantReport",
    "Limits",
    "NoVerticesError",
    "RingGraphError",
    "RingSpec",
    "SweepReport",
    "UnknownClaimError",
    "build_gamma",
    "build_graph",
    "build_pis",
    "build_sii",
    "find_isomorphism",
    "sweep",
    "verify_claim",
    "verify_map_isomorphism",
]
