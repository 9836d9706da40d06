"""Claim registry and sweep driver."""

from ._context import RingContext
from ._figures import expected_figure, golden_rings
from ._registry import CLAIMS, Citation, Claim, ClaimResult, cite, claim_ids, lookup_claim, verify_claim, verify_ring
from ._sweep import SweepReport, cyclic_family, product_family, ring_family, sweep

__all__ = [
    "CLAIMS",
    "Citation",
    "Claim",
    "ClaimResult",
    "RingContext",
    "SweepReport",
    "cite",
    "claim_ids",
    "cyclic_family",
    "expected_figure",
    "golden_rings",
    "lookup_claim",
    "product_family",
    "ring_family",
    "sweep",
    "verify_claim",
    "verify_ring",
]
