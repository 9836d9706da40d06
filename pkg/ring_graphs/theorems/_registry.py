"""Executable claims about ideal graphs of finite rings, keyed by claim id.

Each checker receives a `RingContext` and returns a `Verdict`; biconditional
claims are checked in both directions on every ring. `verify_claim` attaches
the claim id and ring to the verdict.
"""

import logging
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from constant import ClaimStatus, GraphKind

from ..builders import build_sii
from ..common_utils import extended_to_json, on_cap_exceeded
from ..errors import CapExceededError, DomainError, UnknownClaimError
from ..graph import IdealGraph, find_isomorphism, isomorphism_violation
from ..limits import DEFAULT_LIMITS, Limits
from ..ring import (
    Ideal,
    RingSpec,
    annihilator,
    comultiplication_violations,
    crt_decomposition,
    crt_image,
    ideal_sum,
    intersect,
    is_contained,
    is_coreduced,
    is_maximal,
    is_minimal,
    is_second,
    is_second_oracle,
    is_sum_of_two_fields,
    is_sum_of_two_minimal,
    permute_components,
)
from ._context import RingContext
from ._figures import expected_figure

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Citation:
    """Numbered items of the source text that state a claim, with a short quote.

    Attributes:
        items (Tuple[str, ...]): Item labels such as ``"2.6"`` or ``"0190"``.
        quote (str): The phrase the check is built from.
    """

    items: Tuple[str, ...]
    quote: str

    def __post_init__(self):
        if not self.items or not self.quote:
            raise DomainError("A citation needs at least one item and a quote.")

    def to_dict(self) -> dict:
        return {"items": list(self.items), "quote": self.quote}


def cite(*items: str, quote: str) -> Citation:
    return Citation(tuple(items), quote)


@dataclass(frozen=True)
class ClaimResult:
    """One claim checked on one ring.

    Attributes:
        claim_id (str): Registry id.
        ring (str): Ring spec string.
        status (ClaimStatus): pass, fail, skipped or capped.
        witness (Optional[dict]): JSON-ready counterexample; always present on failure.
        reason (Optional[str]): Why the claim was skipped or capped.
        notes (Tuple[str, ...]): Readings and boundary cases worth recording.
        citation (Optional[Citation]): Where the claim is stated; set for every registry result.
    """

    claim_id: str
    ring: str
    status: ClaimStatus
    witness: Optional[dict] = None
    reason: Optional[str] = None
    notes: Tuple[str, ...] = ()
    citation: Optional[Citation] = None

    def __post_init__(self):
        if self.status is ClaimStatus.FAIL and self.witness is None:
            raise DomainError(f"Failed claim {self.claim_id} on {self.ring} has no witness.")

    def to_dict(self) -> dict:
        return {
            "claim": self.claim_id,
            "ring": self.ring,
            "status": self.status.value,
            "witness": self.witness,
            "reason": self.reason,
            "notes": list(self.notes),
            "citation": self.citation.to_dict() if self.citation else None,
        }


@dataclass(frozen=True)
class Verdict:
    """A checker's outcome before it is tied to a claim id and ring."""

    status: ClaimStatus
    witness: Optional[dict] = None
    reason: Optional[str] = None
    notes: Tuple[str, ...] = ()


@dataclass(frozen=True)
class Claim:
    """A registered claim.

    Attributes:
        claim_id (str): Unique id.
        statement (str): The claim in words.
        citation (Citation): Where the claim is stated.
        check (Callable[[RingContext], Verdict]): Checker, including its applicability tests.
    """

    claim_id: str
    statement: str
    citation: Citation
    check: Callable[[RingContext], Verdict] = field(repr=False, compare=False)


CLAIMS: Dict[str, Claim] = {}


def holds(*notes: str) -> Verdict:
    return Verdict(ClaimStatus.PASS, notes=notes)


def broken(witness: dict, *notes: str) -> Verdict:
    return Verdict(ClaimStatus.FAIL, witness=witness, notes=notes)


def skip(reason: str) -> Verdict:
    return Verdict(ClaimStatus.SKIPPED, reason=reason)


def expect(condition: bool, witness: dict, *notes: str) -> Verdict:
    """Pass when ``condition`` holds, otherwise fail with ``witness``."""
    return holds(*notes) if condition else broken(witness, *notes)


def _capped(error: CapExceededError, ctx: RingContext) -> Verdict:
    return Verdict(ClaimStatus.CAPPED, reason=str(error))


def claim(
    claim_id: str, statement: str, *, cites: Citation, cyclic_only: bool = False, needs_vertices: bool = True
) -> Callable:
    """Register a checker under ``claim_id``.

    Args:
        claim_id (str): Unique id.
        statement (str): The claim in words.
        cites (Citation): Where the claim is stated.
        cyclic_only (bool): Skip rings that are not ``Z_n``.
        needs_vertices (bool): Skip rings without non-zero proper ideals.

    Returns:
        Callable: The decorator; cap errors inside the checker become ``capped`` verdicts.
    """

    def decorator(func: Callable[[RingContext], Verdict]) -> Callable[[RingContext], Verdict]:
        @on_cap_exceeded(_capped)
        def check(ctx: RingContext) -> Verdict:
            if cyclic_only and not ctx.ring.is_cyclic:
                return skip("cyclic rings only")
            if needs_vertices and not ctx.has_vertices:
                return skip("no vertices")
            return func(ctx)

        if claim_id in CLAIMS:
            raise DomainError(f"Claim id {claim_id} registered twice.")
        CLAIMS[claim_id] = Claim(claim_id, statement, cites, check)
        return func

    return decorator


def _names(ideals: Iterable[Ideal]) -> List[str]:
    return [ideal.render() for ideal in ideals]


def _edge_names(edges: Iterable[Sequence[Ideal]]) -> List[List[str]]:
    return [sorted(_names(edge)) for edge in edges]


def _isomorphism_witness(source: IdealGraph, target: IdealGraph, mapping: Dict[Ideal, Ideal]) -> Optional[dict]:
    violation = isomorphism_violation(source, target, {v: mapping[v] for v in source.vertices})
    if violation is None:
        return None
    a, b = violation
    return {
        "pair": _names(violation),
        "images": _names((mapping[a], mapping[b])),
        "adjacent_in_source": source.are_adjacent(a, b),
    }


@claim(
    "D-sii",
    "Two distinct non-zero proper ideals are adjacent in SII(R) iff their intersection is a second ideal, "
    "with second ideals recognised element by element.",
    cites=cite("2.1", quote="adjacent if and only if the intersection of I and J is a second ideal of R"),
)
def _check_definition(ctx: RingContext) -> Verdict:
    ring, graph = ctx.ring, ctx.sii
    second = {}
    for a, b in combinations(graph.vertices, 2):
        meet = intersect(ring, a, b)
        if meet not in second:
            second[meet] = is_second_oracle(ring, meet, ctx.limits)
        if graph.are_adjacent(a, b) != second[meet]:
            return broken(
                {
                    "pair": _names((a, b)),
                    "intersection": meet.render(),
                    "adjacent": graph.are_adjacent(a, b),
                    "intersection_second": second[meet],
                }
            )
    return holds()


@claim(
    "E-star",
    "SII(Z_(p^k)) is a star centred at <p^(k-1)>, which is the only second ideal.",
    cites=cite("0190", quote="star graph with center <p^(k-1)>"),
    cyclic_only=True,
)
def _check_star(ctx: RingContext) -> Verdict:
    if len(ctx.factorization) != 1:
        return skip("not a prime power")
    ((p, k),) = ctx.factorization.pairs
    center = ctx.ring.ideal(p ** (k - 1))
    graph = ctx.sii
    stray = [edge for edge in graph.edges() if center not in edge]
    missing = [v for v in graph.vertices if v != center and not graph.are_adjacent(center, v)]
    return expect(
        not stray and not missing and ctx.seconds == [center],
        {
            "center": center.render(),
            "stray_edges": _edge_names(stray),
            "missing": _names(missing),
            "second": _names(ctx.seconds),
        },
    )


def _triangle_verdict(ctx: RingContext, gens: Tuple[int, int, int]) -> Verdict:
    triangle = [ctx.ring.ideal(d) for d in gens]
    missing = [pair for pair in combinations(triangle, 2) if not ctx.sii.are_adjacent(*pair)]
    return expect(not missing, {"triangle": _names(triangle), "missing_edges": _edge_names(missing)})


@claim(
    "P-girth-a",
    "For squarefree n with k >= 3 primes, <p1..p(k-1)>, <p1..p(k-2)>, <p(k-1)> form a triangle.",
    cites=cite("p0190", quote="contains a cycle of length 3"),
    cyclic_only=True,
)
def _check_squarefree_triangle(ctx: RingContext) -> Verdict:
    factorization = ctx.factorization
    if len(factorization) < 3 or any(e != 1 for e in factorization.exponents):
        return skip("not a product of at least three distinct primes")
    primes = factorization.primes
    k = len(primes)
    return _triangle_verdict(ctx, (math.prod(primes[: k - 1]), math.prod(primes[: k - 2]), primes[k - 2]))


@claim(
    "P-girth-b",
    "For n = p1^3 p2..pk (k >= 2), <p1^2 p2..pk>, <p2..pk>, <p1^2> form a triangle.",
    cites=cite("p0190", quote="contains a cycle of length 3"),
    cyclic_only=True,
)
def _check_cube_triangle(ctx: RingContext) -> Verdict:
    factorization = ctx.factorization
    exponents = sorted(factorization.exponents, reverse=True)
    if len(exponents) < 2 or exponents[0] != 3 or any(e != 1 for e in exponents[1:]):
        return skip("not of the form p1^3 p2..pk")
    cube = next(p for p, e in factorization if e == 3)
    rest = math.prod(p for p, e in factorization if e == 1)
    return _triangle_verdict(ctx, (cube**2 * rest, rest, cube**2))


@claim(
    "R-sub",
    "Every SII edge is an edge of the intersection graph; for n = p^3 q the pair <q>, <pq> shows it is not induced.",
    cites=cite("2.661", "000", quote="is a subgraph of Gamma(R)"),
)
def _check_subgraph(ctx: RingContext) -> Verdict:
    sii, gamma = ctx.sii, ctx.gamma
    stray = [edge for edge in sii.edges() if not gamma.are_adjacent(*edge)]
    witness = {"sii_edges_outside_gamma": _edge_names(stray)}
    notes = []
    factorization = ctx.factorization
    if factorization is not None and sorted(factorization.exponents) == [1, 3]:
        p = next(p for p, e in factorization if e == 3)
        q = next(p for p, e in factorization if e == 1)
        pair = (ctx.ring.ideal(q), ctx.ring.ideal(p * q))
        induced_witness = gamma.are_adjacent(*pair) and not sii.are_adjacent(*pair)
        witness["non_induced_pair"] = _names(pair)
        if not induced_witness:
            return broken(witness)
        notes.append(f"non-induced pair {pair[0]}, {pair[1]}")
    return expect(not stray, witness, *notes)


@claim(
    "R-euler",
    "SII(Z_n) is Eulerian for squarefree n with >= 3 primes and not Eulerian for n = p^2 q^2; "
    "the intersection graph of Z_n is Eulerian iff n is squarefree or every exponent is even.",
    cites=cite("2.6861", quote="is an Eulerian graph"),
    cyclic_only=True,
)
def _check_eulerian(ctx: RingContext) -> Verdict:
    factorization = ctx.factorization
    m = len(factorization)
    squarefree = all(e == 1 for e in factorization.exponents)
    all_even = all(e % 2 == 0 for e in factorization.exponents)
    problems = {}
    checked = False
    if squarefree and m >= 3:
        checked = True
        if not ctx.sii.is_eulerian():
            problems["sii_eulerian"] = False
    elif sorted(factorization.exponents) == [2, 2]:
        checked = True
        if ctx.sii.is_eulerian():
            problems["sii_eulerian"] = True
    if ctx.gamma.edge_count:
        checked = True
        expected = squarefree or all_even
        if ctx.gamma.is_eulerian() != expected:
            problems["gamma_eulerian"] = not expected
    if not checked:
        return skip("edgeless")
    return expect(not problems, problems, f"{m} distinct prime factors")


@claim(
    "T-univ",
    "SII(R) has a universal vertex iff R has one minimal ideal, or two whose sum is a maximal ideal "
    "with no non-zero non-second ideal strictly inside.",
    cites=cite("2.2", quote="has a universal vertex if and only if"),
)
def _check_universal(ctx: RingContext) -> Verdict:
    universal = ctx.sii.universal_vertices()
    return expect(
        bool(universal) == ctx.universal_configuration,
        {
            "universal": _names(universal),
            "minimal": _names(ctx.minimal),
            "configuration": ctx.universal_configuration,
        },
    )


def _socle_hypothesis(ctx: RingContext) -> Optional[Verdict]:
    if is_coreduced(ctx.ring):
        return skip("coreduced")
    if ctx.socle in (ctx.ring.zero, ctx.ring.unit):
        return skip("second socle is zero or the whole ring")
    return None


@claim(
    "R-socle",
    "In a non-coreduced ring with proper non-zero second socle, "
    "sec(R) is adjacent to every other second ideal.",
    cites=cite("2.3", quote="adjacent to each element of Spec^s(R)"),
)
def _check_socle_adjacency(ctx: RingContext) -> Verdict:
    skipped = _socle_hypothesis(ctx)
    if skipped:
        return skipped
    socle = ctx.socle
    notes = ["self-pair excluded"] if socle in ctx.seconds else []
    missing = [s for s in ctx.seconds if s != socle and not ctx.sii.are_adjacent(socle, s)]
    return expect(not missing, {"socle": socle.render(), "non_adjacent": _names(missing)}, *notes)


@claim(
    "C-socle",
    "Under the same hypotheses, sec(R) is the only minimal ideal iff sec(R) is a universal vertex.",
    cites=cite("2.4", quote="the only minimal ideal of R if and only if"),
)
def _check_socle_universal(ctx: RingContext) -> Verdict:
    skipped = _socle_hypothesis(ctx)
    if skipped:
        return skipped
    socle = ctx.socle
    unique_minimal = ctx.minimal == [socle]
    universal = socle in ctx.sii.universal_vertices()
    witness = {
        "socle": socle.render(),
        "minimal": _names(ctx.minimal),
        "socle_universal": universal,
    }
    if unique_minimal and not universal:
        return broken(witness)
    if universal and not unique_minimal:
        if len(ctx.minimal) == 2 and ctx.universal_configuration:
            return holds(
                f"literal converse fails: {socle} is universal but not the only minimal ideal; "
                "explained by the two-minimal universal configuration"
            )
        return broken(witness)
    return holds()


@claim(
    "T-isol",
    "A vertex is isolated in SII(R) iff it is both a minimal and a maximal ideal.",
    cites=cite("2.5", quote="is an isolated vertex in SII(R) if and only if I is a minimal as well as maximal ideal"),
)
def _check_isolated(ctx: RingContext) -> Verdict:
    isolated = ctx.sii.isolated_vertices()
    expected = [v for v in ctx.vertices if is_minimal(ctx.ring, v) and is_maximal(ctx.ring, v)]
    return expect(
        set(isolated) == set(expected),
        {"isolated": _names(isolated), "minimal_and_maximal": _names(expected)},
    )


@claim(
    "T-comp",
    "SII(R) is complete iff R has one minimal ideal "
    "and every non-zero non-second proper ideal is maximal.",
    cites=cite("2.6", quote="complete if and only if R has exactly one minimal ideal"),
)
def _check_complete(ctx: RingContext) -> Verdict:
    non_second_not_maximal = [
        v for v in ctx.vertices if not is_second(ctx.ring, v) and not is_maximal(ctx.ring, v)
    ]
    configuration = len(ctx.minimal) == 1 and not non_second_not_maximal
    complete = ctx.sii.is_complete()
    return expect(
        complete == configuration,
        {
            "complete": complete,
            "minimal": _names(ctx.minimal),
            "non_second_not_maximal": _names(non_second_not_maximal),
        },
    )


@claim(
    "C-comp-Zn",
    "SII(Z_n) is complete iff n = p^2 or n = p^3.",
    cites=cite("2.76", quote="complete graph if and only if n=p^k"),
    cyclic_only=True,
)
def _check_complete_cyclic(ctx: RingContext) -> Verdict:
    factorization = ctx.factorization
    expected = len(factorization) == 1 and factorization.exponents[0] in (2, 3)
    complete = ctx.sii.is_complete()
    return expect(complete == expected, {"complete": complete, "expected": expected})


@claim(
    "E-noncomplete",
    "For n = p^k with k >= 4, <p^2> is neither second nor maximal and SII(Z_n) is not complete.",
    cites=cite("2.7996", quote="is a non-second and non-maximal ideal"),
    cyclic_only=True,
)
def _check_noncomplete(ctx: RingContext) -> Verdict:
    factorization = ctx.factorization
    if len(factorization) != 1 or factorization.exponents[0] < 4:
        return skip("not p^k with k >= 4")
    square = ctx.ring.ideal(factorization.primes[0] ** 2)
    second, maximal, complete = is_second(ctx.ring, square), is_maximal(ctx.ring, square), ctx.sii.is_complete()
    return expect(
        not (second or maximal or complete),
        {"ideal": square.render(), "second": second, "maximal": maximal, "complete": complete},
    )


@claim(
    "T-disc-Zn",
    "SII(Z_n) is disconnected iff n = pq for distinct primes p, q.",
    cites=cite("2.799", quote="disconnected if and only if n=pq"),
    cyclic_only=True,
)
def _check_disconnected_cyclic(ctx: RingContext) -> Verdict:
    semiprime = ctx.factorization.exponents == [1, 1]
    connected = ctx.sii.is_connected()
    return expect(connected != semiprime, {"connected": connected, "semiprime": semiprime})


def _connectivity_verdict(graph: IdealGraph, split: bool, split_name: str) -> Verdict:
    connected = graph.is_connected()
    diameter = graph.diameter()
    return expect(
        connected != split and (not connected or diameter <= 2),
        {"connected": connected, split_name: split, "diameter": extended_to_json(diameter)},
    )


@claim(
    "T-conn",
    "SII(R) is connected iff R is not a direct sum of two minimal ideals, and then diam(SII(R)) <= 2.",
    cites=cite("2.7", quote="connected if and only if R is not a direct sum of two of its minimal ideals"),
)
def _check_connected(ctx: RingContext) -> Verdict:
    return _connectivity_verdict(ctx.sii, is_sum_of_two_minimal(ctx.ring), "sum_of_two_minimal")


@claim(
    "C-comult",
    "For a comultiplication ring that is not a direct sum of two minimal ideals, diam(SII(R)) <= 2.",
    cites=cite("2.8", quote="diam(SII(R)) <= 2"),
)
def _check_comultiplication_diameter(ctx: RingContext) -> Verdict:
    violations = comultiplication_violations(ctx.ring, ctx.limits)
    if violations:
        return skip(f"not a comultiplication ring: {len(violations)} ideals with Ann(Ann(I)) != I")
    if is_sum_of_two_minimal(ctx.ring):
        return skip("direct sum of two minimal ideals")
    diameter = ctx.sii.diameter()
    return expect(diameter <= 2, {"diameter": extended_to_json(diameter)})


@claim(
    "T-pis-conn",
    "PIS(R) is connected iff R is not a direct sum of two fields, and then diam(PIS(R)) <= 2.",
    cites=cite("2.5", quote="PIS(R) is connected if and only if R is not a direct sum of two fields"),
)
def _check_pis_connected(ctx: RingContext) -> Verdict:
    return _connectivity_verdict(ctx.pis, is_sum_of_two_fields(ctx.ring), "sum_of_two_fields")


def _non_comparable_edges(ctx: RingContext) -> List[Tuple[Ideal, Ideal]]:
    return [(a, b) for a, b in ctx.sii.edges() if not is_contained(a, b) and not is_contained(b, a)]


@claim(
    "T-girth3",
    "If two non-comparable ideals are adjacent in SII(R), then girth(SII(R)) = 3.",
    cites=cite("2.9", quote="girth(SII(R)) = 3"),
)
def _check_girth_three(ctx: RingContext) -> Verdict:
    pairs = _non_comparable_edges(ctx)
    if not pairs:
        return skip("no adjacent non-comparable pair")
    girth = ctx.sii.girth()
    return expect(girth == 3, {"pair": _names(pairs[0]), "girth": extended_to_json(girth)})


@claim(
    "C-edge-sec",
    "If SII(R) is acyclic or has girth > 3, every edge has a second ideal as an endpoint.",
    cites=cite("2.10", quote="one of the terminal vertices is a second ideal"),
)
def _check_edge_second(ctx: RingContext) -> Verdict:
    girth = ctx.sii.girth()
    if girth == 3:
        return skip("girth 3")
    bad = [(a, b) for a, b in ctx.sii.edges() if not (is_second(ctx.ring, a) or is_second(ctx.ring, b))]
    return expect(not bad, {"edges_without_second_endpoint": _edge_names(bad), "girth": extended_to_json(girth)})


@claim(
    "T-count",
    "If SII(R) has finite girth g, R has at least floor(g / 2) second ideals.",
    cites=cite("2.11", quote="at least floor(n/2) distinct second ideals"),
)
def _check_second_count(ctx: RingContext) -> Verdict:
    girth = ctx.sii.girth()
    if math.isinf(girth):
        return skip("acyclic")
    count = len(ctx.seconds)
    return expect(count >= girth // 2, {"girth": girth, "second_ideals": count})


@claim(
    "C-2k",
    "SII(R) is acyclic or girth(SII(R)) <= 2k, where k is the number of second ideals.",
    cites=cite("2.12", quote="either acyclic or girth(SII(R)) <= 2k"),
)
def _check_girth_bound(ctx: RingContext) -> Verdict:
    girth = ctx.sii.girth()
    count = len(ctx.seconds)
    return expect(math.isinf(girth) or girth <= 2 * count, {"girth": extended_to_json(girth), "second_ideals": count})


@claim(
    "T-dom",
    "The minimal ideals form a minimal dominating set of SII(R), so gamma <= |M|; gamma = 1 iff SII(R) has a "
    "universal vertex configuration, and gamma = 2 for two minimal ideals outside it.",
    cites=cite("2.13", quote="is a minimal dominating set of SII(R)"),
)
def _check_domination(ctx: RingContext) -> Verdict:
    graph = ctx.sii
    minimal = ctx.minimal
    gamma = graph.domination_number(ctx.limits)
    problems = {}
    if not graph.is_dominating_set(minimal):
        problems["minimal_ideals_dominate"] = False
    elif not graph.is_minimal_dominating_set(minimal):
        problems["minimal_ideals_minimally_dominate"] = False
    if gamma > len(minimal):
        problems["gamma_above_minimal_count"] = True
    if (gamma == 1) != ctx.universal_configuration:
        problems["gamma_one_matches_configuration"] = False

    notes = []
    if len(minimal) == 2 and not ctx.universal_configuration:
        literal = gamma == 2
        outside_direct_sum = literal or is_sum_of_two_minimal(ctx.ring)
        if outside_direct_sum and not literal:
            notes.append("two-minimal clause holds only outside the direct-sum case")
        if not outside_direct_sum:
            problems["gamma_for_two_minimal"] = gamma

    if problems:
        problems.update({"gamma": gamma, "minimal": _names(minimal)})
    return expect(not problems, problems, *notes)


@claim(
    "R-dom-strict",
    "For n = pqr, each of {<p>,<qr>}, {<r>,<pq>}, {<q>,<pr>} dominates SII(Z_n), so gamma < 3 = |M|.",
    cites=cite("2.14", quote="forms a dominating set"),
    cyclic_only=True,
)
def _check_strict_domination(ctx: RingContext) -> Verdict:
    factorization = ctx.factorization
    if factorization.exponents != [1, 1, 1]:
        return skip("not a product of three distinct primes")
    p, q, r = factorization.primes
    ring, graph = ctx.ring, ctx.sii
    pairs = [(ring.ideal(p), ring.ideal(q * r)), (ring.ideal(r), ring.ideal(p * q)), (ring.ideal(q), ring.ideal(p * r))]
    not_dominating = [pair for pair in pairs if not graph.is_dominating_set(pair)]
    gamma = graph.domination_number(ctx.limits)
    return expect(
        not not_dominating and gamma < len(ctx.minimal),
        {"not_dominating": _edge_names(not_dominating), "gamma": gamma, "minimal_count": len(ctx.minimal)},
    )


def _component_orders(k: int) -> List[Tuple[int, ...]]:
    identity = tuple(range(k))
    candidates = [tuple(reversed(identity)), identity[1:] + identity[:1]]
    return [order for order in dict.fromkeys(candidates) if order != identity]


@claim(
    "P-iso-rings",
    "Isomorphic rings have isomorphic SII graphs "
    "(Chinese remainder splitting, component permutations).",
    cites=cite("2.15", quote="isomorphic as graphs"),
)
def _check_ring_isomorphism(ctx: RingContext) -> Verdict:
    source = ctx.sii
    targets: List[Tuple[RingSpec, Dict[Ideal, Ideal]]] = []
    if ctx.ring.is_cyclic:
        if len(ctx.factorization) < 2:
            return skip("single prime-power component")
        decomposed = crt_decomposition(ctx.ring.components[0])
        targets.append((decomposed, {v: crt_image(decomposed, v) for v in source.vertices}))
    else:
        for order in _component_orders(len(ctx.ring.components)):
            targets.append(permute_components(ctx.ring, order))

    notes = []
    built = []
    for target_ring, mapping in targets:
        target = build_sii(target_ring, limits=ctx.limits)
        built.append((target_ring, target))
        witness = _isomorphism_witness(source, target, mapping)
        if witness is not None:
            witness["target"] = str(target_ring)
            return broken(witness)
        notes.append(f"explicit map onto SII({target_ring}) verified")

    target_ring, target = built[0]
    if max(source.vertex_count, target.vertex_count) <= ctx.limits.isomorphism_vertices:
        if find_isomorphism(source, target, ctx.limits) is None:
            return broken({"target": str(target_ring), "search": "no isomorphism found"})
    else:
        notes.append("isomorphism search skipped above cap")
    return holds(*notes)


def _comultiplication_skip(ctx: RingContext) -> Optional[Verdict]:
    violations = comultiplication_violations(ctx.ring, ctx.limits)
    if violations:
        return skip(f"not a comultiplication ring: {len(violations)} ideals with Ann(Ann(I)) != I")
    return None


@claim(
    "P-ann-adj",
    "In a comultiplication ring, SII and PIS adjacency agree for I, J with Ann(I ∩ J) = I + J, "
    "for annihilator pairs, and for I, Ann(I).",
    cites=cite("2.16", quote="adjacent in SII(R) if and only if they are adjacent in PIS(R)"),
)
def _check_annihilator_adjacency(ctx: RingContext) -> Verdict:
    skipped = _comultiplication_skip(ctx)
    if skipped:
        return skipped
    ring, sii, pis = ctx.ring, ctx.sii, ctx.pis
    self_annihilating = any(annihilator(ring, v) == v for v in ctx.vertices)
    for a, b in combinations(ctx.vertices, 2):
        ann_a, ann_b = annihilator(ring, a), annihilator(ring, b)
        cases = []
        if annihilator(ring, intersect(ring, a, b)) == ideal_sum(ring, a, b):
            cases.append("annihilator of intersection equals sum")
        if ann_a == b and ann_b == a:
            cases.append("mutual annihilators")
        if b == ann_a or a == ann_b:
            cases.append("ideal and its annihilator")
        if cases and sii.are_adjacent(a, b) != pis.are_adjacent(a, b):
            return broken(
                {"pair": _names((a, b)), "cases": cases, "sii_adjacent": sii.are_adjacent(a, b)}
            )
    return holds(*(["self-annihilating pair excluded"] if self_annihilating else []))


def _annihilator_isomorphism(ctx: RingContext) -> Verdict:
    mapping = {v: annihilator(ctx.ring, v) for v in ctx.vertices}
    witness = _isomorphism_witness(ctx.pis, ctx.sii, mapping)
    return expect(witness is None, witness or {})


@claim(
    "T-ann-iso",
    "For a comultiplication ring, I -> Ann(I) is an isomorphism PIS(R) -> SII(R).",
    cites=cite("2.17", quote="PIS(R) is isomorphic to SII(R)"),
)
def _check_annihilator_isomorphism(ctx: RingContext) -> Verdict:
    skipped = _comultiplication_skip(ctx)
    if skipped:
        return skipped
    return _annihilator_isomorphism(ctx)


@claim(
    "C-ann-iso-Zn",
    "I -> Ann(I) is an isomorphism PIS(Z_n) -> SII(Z_n).",
    cites=cite("2.18", quote="PIS(Z_n) is isomorphic to SII(Z_n)"),
    cyclic_only=True,
)
def _check_annihilator_isomorphism_cyclic(ctx: RingContext) -> Verdict:
    violations = comultiplication_violations(ctx.ring, ctx.limits)
    if violations:
        return broken({"ann_ann_violations": _names(violations)})
    return _annihilator_isomorphism(ctx)


@claim(
    "E-fig",
    "The drawn PIS and SII graphs of Z_(p^3 q), Z_(p^2 q^2), Z_(pqr) and Z_(p^2 q) are exact.",
    cites=cite("000", "010", "001", "002", quote="the graphs SII and PIS are shown in Figure"),
    cyclic_only=True,
)
def _check_figures(ctx: RingContext) -> Verdict:
    n = ctx.ring.components[0]
    notes = []
    for kind in (GraphKind.PIS, GraphKind.SII):
        expected = expected_figure(n, kind)
        if expected is None:
            continue
        expected_vertices, expected_edges = expected
        graph = ctx.graph(kind)
        actual_edges = {frozenset(edge) for edge in graph.edges()}
        if set(graph.vertices) != expected_vertices or actual_edges != expected_edges:
            return broken(
                {
                    "kind": kind.value,
                    "missing_vertices": _names(sorted(expected_vertices - set(graph.vertices))),
                    "extra_vertices": _names(sorted(set(graph.vertices) - expected_vertices)),
                    "missing_edges": _edge_names(sorted(tuple(sorted(e)) for e in expected_edges - actual_edges)),
                    "extra_edges": _edge_names(sorted(tuple(sorted(e)) for e in actual_edges - expected_edges)),
                }
            )
        notes.append(f"{kind.value}: {len(expected_edges)} edges matched")
    if not notes:
        return skip("no drawing for this ring shape")
    return holds(*notes)


@claim(
    "E-int",
    "SII of the integers has no edges while 2Z is adjacent to every 2kZ in PIS.",
    cites=cite("2.19", quote="E(SII(Z)) is empty"),
    needs_vertices=False,
)
def _check_integers(ctx: RingContext) -> Verdict:
    return skip("infinite vertex set")


def claim_ids() -> List[str]:
    """Registered claim ids in registry order."""
    return list(CLAIMS)


def _run(claim_obj: Claim, ctx: RingContext) -> ClaimResult:
    verdict = claim_obj.check(ctx)
    result = ClaimResult(
        claim_id=claim_obj.claim_id,
        ring=str(ctx.ring),
        status=verdict.status,
        witness=verdict.witness,
        reason=verdict.reason,
        notes=tuple(verdict.notes),
        citation=claim_obj.citation,
    )
    if result.status is ClaimStatus.FAIL:
        logger.warning("Claim %s failed on %s: %s", result.claim_id, result.ring, result.witness)
    return result


def lookup_claim(claim_id: str) -> Claim:
    """Registered claim by id.

    Raises:
        UnknownClaimError: If the id is not registered.
    """
    try:
        return CLAIMS[claim_id]
    except KeyError:
        raise UnknownClaimError(f"Unknown claim id '{claim_id}'.") from None


def verify_claim(claim_id: str, ring: RingSpec, limits: Limits = DEFAULT_LIMITS) -> ClaimResult:
    """Check one claim on one ring.

    Args:
        claim_id (str): Registry id, e.g. ``"T-conn"``.
        ring (RingSpec): The ring.
        limits (Limits): Size caps; exceeding one yields ``status=capped``.

    Returns:
        ClaimResult: The outcome.

    Raises:
        UnknownClaimError: If the id is not registered.
    """
    return _run(lookup_claim(claim_id), RingContext(ring, limits))


def verify_ring(ids: Sequence[str], ring: RingSpec, limits: Limits = DEFAULT_LIMITS) -> List[ClaimResult]:
    """Check several claims on one ring, sharing the built graphs between them.

    Raises:
        UnknownClaimError: If any id is not registered.
    """
    claims = [lookup_claim(claim_id) for claim_id in ids]
    ctx = RingContext(ring, limits)
    return [_run(claim_obj, ctx) for claim_obj in claims]
