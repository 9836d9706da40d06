"""Exact minimum dominating set by branch and bound over closed-neighbourhood bitmasks."""

from typing import List, Sequence, Set


def closed_neighborhood_masks(neighbors: Sequence[Set[int]]) -> List[int]:
    """Bitmask of ``N[v] = N(v) + {v}`` for every vertex index ``v``."""
    masks = []
    for v, adjacent in enumerate(neighbors):
        mask = 1 << v
        for u in adjacent:
            mask |= 1 << u
        masks.append(mask)
    return masks


def greedy_dominating_set(masks: Sequence[int]) -> List[int]:
    """Greedy upper bound: repeatedly take the vertex covering most undominated vertices."""
    full = (1 << len(masks)) - 1
    dominated = 0
    chosen = []
    while dominated != full:
        best = max(range(len(masks)), key=lambda v: ((masks[v] & ~dominated).bit_count(), -v))
        chosen.append(best)
        dominated |= masks[best]
    return chosen


def minimum_dominating_set(neighbors: Sequence[Set[int]]) -> List[int]:
    """Exact minimum dominating set.

    Every undominated vertex ``u`` must be covered by some member of ``N[u]``, so
    branching over ``N[u]`` for the lowest undominated ``u`` is exhaustive. A branch
    is pruned when the chosen set plus ``ceil(undominated / max |N[v]|)`` cannot beat
    the incumbent, which starts from the greedy solution.

    Args:
        neighbors (Sequence[Set[int]]): Open neighbourhoods by vertex index.

    Returns:
        List[int]: Sorted vertex indices of one minimum dominating set.
    """
    n = len(neighbors)
    if n == 0:
        return []
    masks = closed_neighborhood_masks(neighbors)
    full = (1 << n) - 1
    max_cover = max(mask.bit_count() for mask in masks)
    coverers = [[v for v in range(n) if masks[v] >> u & 1] for u in range(n)]
    best = greedy_dominating_set(masks)
    chosen: List[int] = []

    def search(dominated: int) -> None:
        nonlocal best
        if dominated == full:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        undominated = full & ~dominated
        lower_bound = -(-undominated.bit_count() // max_cover)
        if len(chosen) + lower_bound >= len(best):
            return
        u = (undominated & -undominated).bit_length() - 1
        candidates = sorted(coverers[u], key=lambda v: (-(masks[v] & undominated).bit_count(), v))
        for v in candidates:
            chosen.append(v)
            search(dominated | masks[v])
            chosen.pop()

    search(0)
    return sorted(best)
