"""Run registered claims over families of rings."""

import logging
from collections import Counter
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from constant import CLAIM_STATUSES, ClaimStatus

from ..arith import is_prime_power
from ..errors import DomainError
from ..limits import DEFAULT_LIMITS, Limits
from ..ring import RingSpec
from ._registry import ClaimResult, claim_ids, lookup_claim, verify_ring

logger = logging.getLogger(__name__)


def cyclic_family(nmax: int) -> List[RingSpec]:
    """``Z_n`` for ``2 <= n <= nmax``.

    Raises:
        DomainError: If ``nmax < 2``.
    """
    if nmax < 2:
        raise DomainError(f"nmax must be at least 2, got {nmax}")
    return [RingSpec.cyclic(n) for n in range(2, nmax + 1)]


def _prime_powers(limit: int) -> List[int]:
    return [q for q in range(2, limit + 1) if is_prime_power(q)]


def product_family(max_order: int) -> List[RingSpec]:
    """Products of at least two prime powers, components non-decreasing, of order at most ``max_order``."""
    powers = _prime_powers(max_order // 2)
    found: List[RingSpec] = []

    def extend(prefix: Tuple[int, ...], order: int, start: int) -> None:
        if len(prefix) >= 2:
            found.append(RingSpec(prefix))
        for position in range(start, len(powers)):
            q = powers[position]
            if order * q > max_order:
                break
            extend(prefix + (q,), order * q, position)

    extend((), 1, 0)
    return found


def ring_family(nmax: int, products_up_to: int = 0, explicit: Iterable[RingSpec] = ()) -> List[RingSpec]:
    """Cyclic rings up to ``nmax``, product rings up to order ``products_up_to`` and explicit rings.

    Returns:
        List[RingSpec]: Unique rings sorted by order, then spec string.

    Raises:
        DomainError: If ``nmax < 2``.
    """
    rings = cyclic_family(nmax)
    if products_up_to >= 4:
        rings += product_family(products_up_to)
    rings += list(explicit)
    unique = {str(ring): ring for ring in rings}
    return sorted(unique.values(), key=lambda ring: (ring.order, str(ring)))


@dataclass(frozen=True)
class SweepReport:
    """Results of a sweep.

    Attributes:
        results (Tuple[ClaimResult, ...]): Sorted by ring order, ring spec, then registry position.
        claim_ids (Tuple[str, ...]): Claims that were run.
        ring_count (int): Number of rings swept.
    """

    results: Tuple[ClaimResult, ...]
    claim_ids: Tuple[str, ...]
    ring_count: int

    @property
    def summary(self) -> Dict[str, int]:
        """Dict[str, int]: Result count per status."""
        counts = Counter(result.status.value for result in self.results)
        return {status: counts.get(status, 0) for status in CLAIM_STATUSES}

    @property
    def tallies(self) -> Dict[str, Dict[str, int]]:
        """Dict[str, Dict[str, int]]: Result count per status for every claim id."""
        tallies = {claim_id: dict.fromkeys(CLAIM_STATUSES, 0) for claim_id in self.claim_ids}
        for result in self.results:
            tallies[result.claim_id][result.status.value] += 1
        return tallies

    @property
    def failures(self) -> List[ClaimResult]:
        return [result for result in self.results if result.status is ClaimStatus.FAIL]

    def to_dict(self) -> dict:
        return {
            "rings": self.ring_count,
            "summary": self.summary,
            "tallies": self.tallies,
            "claims": [result.to_dict() for result in self.results],
        }


def _verify_task(task: Tuple[Tuple[str, ...], RingSpec, Limits]) -> List[ClaimResult]:
    ids, ring, limits = task
    return verify_ring(ids, ring, limits)


def sweep(
    ids: Optional[Sequence[str]],
    rings: Sequence[RingSpec],
    limits: Limits = DEFAULT_LIMITS,
    jobs: int = 1,
) -> SweepReport:
    """Check claims on every ring of a family.

    Args:
        ids (Optional[Sequence[str]]): Claim ids; ``None`` means every registered claim.
        rings (Sequence[RingSpec]): The family; must be non-empty.
        limits (Limits): Size caps.
        jobs (int): Worker processes. Output does not depend on this value.

    Returns:
        SweepReport: Deterministically ordered results.

    Raises:
        DomainError: If the family is empty.
        UnknownClaimError: If an id is not registered.
    """
    if not rings:
        raise DomainError("Ring family is empty.")
    registry = claim_ids()
    ids = tuple(registry if ids is None else ids)
    for claim_id in ids:
        lookup_claim(claim_id)

    logger.info("Sweeping %d claims over %d rings with %d job(s)", len(ids), len(rings), jobs)
    tasks = [(ids, ring, limits) for ring in rings]
    if jobs > 1:
        with Pool(processes=jobs) as pool:
            batches = pool.map(_verify_task, tasks, chunksize=max(1, len(tasks) // (jobs * 4)))
    else:
        batches = [_verify_task(task) for task in tasks]

    order = {claim_id: position for position, claim_id in enumerate(registry)}
    specs = {str(ring): ring for ring in rings}
    results = sorted(
        (result for batch in batches for result in batch),
        key=lambda result: (specs[result.ring].order, result.ring, order[result.claim_id]),
    )
    report = SweepReport(results=tuple(results), claim_ids=ids, ring_count=len(rings))
    logger.info("Sweep finished: %s", ", ".join(f"{k}={v}" for k, v in report.summary.items()))
    return report
