"""Finite rings presented as products of residue rings, and their ideal lattices.

Every ideal predicate comes in two flavours: a closed form over the divisor
generators (fast path) and a literal element-level scan (oracle). The oracle is
the source of truth; the fast path is only trusted because the test suite
checks the two agree.
"""

import itertools
import math
import re
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Dict, FrozenSet, Iterator, List, Tuple

import numpy as np

from constant import MAX_ORDER

from .arith import divisors, factorize, gcd, is_prime, is_squarefree, lcm
from .errors import DomainError
from .limits import DEFAULT_LIMITS, Limits

Element = Tuple[int, ...]

_SPEC_PATTERN = re.compile(r"^\d+(?:x\d+)*$")


@dataclass(frozen=True, order=True)
class Ideal:
    """An ideal ``<d1> x ... x <dk>`` named by its canonical divisor generators.

    Attributes:
        gens (Tuple[int, ...]): One divisor ``di | ni`` per ring component.
    """

    gens: Tuple[int, ...]

    def render(self) -> str:
        """Render as ``<d>`` for cyclic rings and ``(d1,...,dk)`` for products."""
        if len(self.gens) == 1:
            return f"<{self.gens[0]}>"
        return "(" + ",".join(str(d) for d in self.gens) + ")"

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class RingSpec:
    """A finite commutative ring ``Z_n1 x ... x Z_nk``.

    Attributes:
        components (Tuple[int, ...]): The moduli ``ni``, each at least 2.
        divisor_table (Tuple[Tuple[int, ...], ...]): Ascending divisors of every modulus,
            materialized at construction.
    """

    components: Tuple[int, ...]
    divisor_table: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.components:
            raise DomainError("A ring needs at least one component.")
        for n in self.components:
            if not isinstance(n, int) or isinstance(n, bool) or n < 2:
                raise DomainError(f"Ring component must be an integer >= 2, got {n!r}")
        if math.prod(self.components) > MAX_ORDER:
            raise DomainError(f"Ring order of {self.components} does not fit in 63 bits.")
        object.__setattr__(self, "divisor_table", tuple(tuple(divisors(n)) for n in self.components))

    @classmethod
    def parse(cls, spec: str) -> "RingSpec":
        """Parse a ring spec such as ``"24"`` or ``"4x2x9"``.

        Args:
            spec (str): Ring spec string.

        Returns:
            RingSpec: The parsed ring.

        Raises:
            DomainError: If the string does not follow the grammar or a modulus is below 2.
        """
        spec = spec.strip()
        if not _SPEC_PATTERN.match(spec):
            raise DomainError(f"Invalid ring spec '{spec}'; expected e.g. '24' or '4x2x9'.")
        return cls(tuple(int(part) for part in spec.split("x")))

    @classmethod
    def cyclic(cls, n: int) -> "RingSpec":
        """The residue ring ``Z_n``."""
        return cls((n,))

    @property
    def order(self) -> int:
        """int: Number of ring elements."""
        return math.prod(self.components)

    @property
    def is_cyclic(self) -> bool:
        """bool: True for a single residue ring ``Z_n``."""
        return len(self.components) == 1

    @property
    def zero(self) -> Ideal:
        """Ideal: The zero ideal ``(n1, ..., nk)``."""
        return Ideal(self.components)

    @property
    def unit(self) -> Ideal:
        """Ideal: The unit ideal ``(1, ..., 1)``."""
        return Ideal((1,) * len(self.components))

    def ideal(self, *gens: int) -> Ideal:
        """Build the canonical ideal with the given generators.

        Each generator is normalized through ``gcd(di, ni)``, so ``ideal(0)`` is
        the zero ideal and ``ideal(16)`` of ``Z_24`` is ``<8>``.

        Raises:
            DomainError: If the number of generators differs from the number of components.
        """
        if len(gens) != len(self.components):
            raise DomainError(f"Expected {len(self.components)} generators for ring {self}, got {len(gens)}")
        return Ideal(tuple(math.gcd(d, n) for d, n in zip(gens, self.components)))

    @property
    def display(self) -> str:
        """str: Human form such as ``Z_24`` or ``Z_4 x Z_2``."""
        return " x ".join(f"Z_{n}" for n in self.components)

    def __str__(self) -> str:
        return "x".join(str(n) for n in self.components)


@dataclass(frozen=True)
class IdealClassification:
    """Classification flags of one ideal."""

    ideal: Ideal
    is_zero: bool
    is_unit: bool
    is_second: bool
    is_prime: bool
    is_minimal: bool
    is_maximal: bool

    def to_dict(self) -> dict:
        """Serialize with the ideal rendered as its name."""
        return {
            "ideal": self.ideal.render(),
            "zero": self.is_zero,
            "unit": self.is_unit,
            "second": self.is_second,
            "prime": self.is_prime,
            "minimal": self.is_minimal,
            "maximal": self.is_maximal,
        }


@lru_cache(maxsize=256)
def _ideal_tuple(ring: RingSpec, limits: Limits) -> Tuple[Ideal, ...]:
    limits.check("ideal_count", math.prod(len(table) for table in ring.divisor_table))
    return tuple(Ideal(gens) for gens in itertools.product(*ring.divisor_table))


def enumerate_ideals(ring: RingSpec, limits: Limits = DEFAULT_LIMITS) -> List[Ideal]:
    """All ideals of the ring, lexicographic on generators.

    Args:
        ring (RingSpec): The ring.
        limits (Limits): Caps; ``ideal_count`` bounds the result size.

    Returns:
        List[Ideal]: The ``prod tau(ni)`` ideals.

    Raises:
        CapExceededError: If the ideal count is above the cap.
    """
    return list(_ideal_tuple(ring, limits))


def vertices(ring: RingSpec, limits: Limits = DEFAULT_LIMITS) -> List[Ideal]:
    """Non-zero proper ideals in enumeration order; empty for fields."""
    zero, unit = ring.zero, ring.unit
    return [ideal for ideal in _ideal_tuple(ring, limits) if ideal not in (zero, unit)]


def is_contained(inner: Ideal, outer: Ideal) -> bool:
    """Whether ``inner`` is a subset of ``outer`` (``outer`` generators divide ``inner``'s)."""
    return all(d_inner % d_outer == 0 for d_inner, d_outer in zip(inner.gens, outer.gens))


def intersect(ring: RingSpec, first: Ideal, second: Ideal) -> Ideal:
    """Intersection: componentwise lcm of generators."""
    return ring.ideal(*(lcm(a, b) for a, b in zip(first.gens, second.gens)))


def ideal_sum(ring: RingSpec, first: Ideal, second: Ideal) -> Ideal:
    """Sum: componentwise gcd of generators."""
    return ring.ideal(*(gcd(a, b) for a, b in zip(first.gens, second.gens)))


def annihilator(ring: RingSpec, ideal: Ideal) -> Ideal:
    """``Ann(I) = {r : rI = 0}``, generated componentwise by ``ni / di``."""
    return ring.ideal(*(n // d for n, d in zip(ring.components, ideal.gens)))


def _nonzero_components(ring: RingSpec, ideal: Ideal) -> List[int]:
    return [i for i, (d, n) in enumerate(zip(ideal.gens, ring.components)) if d != n]


def is_second(ring: RingSpec, ideal: Ideal) -> bool:
    """Fast second-ideal test.

    An ideal is second iff exactly one component is non-zero and that component
    ``<di>`` of ``Z_ni`` has prime index ``ni / di``.
    """
    support = _nonzero_components(ring, ideal)
    if len(support) != 1:
        return False
    i = support[0]
    return is_prime(ring.components[i] // ideal.gens[i])


def is_prime_ideal(ring: RingSpec, ideal: Ideal) -> bool:
    """Fast prime-ideal test: one component generated by a prime, all others the whole ring."""
    proper = [d for d in ideal.gens if d != 1]
    return len(proper) == 1 and is_prime(proper[0])


def is_minimal(ring: RingSpec, ideal: Ideal) -> bool:
    """Minimal ideals are ``<ni / p>`` in one component and zero elsewhere.

    The whole ring of a field is excluded, so minimal ideals are always vertices.
    """
    support = _nonzero_components(ring, ideal)
    if len(support) != 1 or ideal == ring.unit:
        return False
    i = support[0]
    return is_prime(ring.components[i] // ideal.gens[i])


def is_maximal(ring: RingSpec, ideal: Ideal) -> bool:
    """Maximal ideals are ``<p>`` in one component and the whole ring elsewhere."""
    return is_prime_ideal(ring, ideal)


def minimal_ideals(ring: RingSpec) -> List[Ideal]:
    """Minimal ideals, built from the prime divisors of every modulus, in enumeration order."""
    found = []
    for i, n in enumerate(ring.components):
        for p in factorize(n).primes:
            gens = list(ring.components)
            gens[i] = n // p
            found.append(Ideal(tuple(gens)))
    return sorted(ideal for ideal in found if ideal != ring.unit)


def maximal_ideals(ring: RingSpec) -> List[Ideal]:
    """Maximal ideals ``<p>`` per component, in enumeration order."""
    found = []
    for i, n in enumerate(ring.components):
        for p in factorize(n).primes:
            gens = [1] * len(ring.components)
            gens[i] = p
            found.append(Ideal(tuple(gens)))
    return sorted(found)


def minimal_ideals_by_scan(ring: RingSpec, limits: Limits = DEFAULT_LIMITS) -> List[Ideal]:
    """Minimal ideals found by scanning the vertices for ones with no non-zero proper subideal."""
    candidates = vertices(ring, limits)
    return [
        ideal
        for ideal in candidates
        if not any(other != ideal and is_contained(other, ideal) for other in candidates)
    ]


def maximal_ideals_by_scan(ring: RingSpec, limits: Limits = DEFAULT_LIMITS) -> List[Ideal]:
    """Maximal ideals found by scanning the lattice for proper ideals with no proper superideal."""
    ideals = enumerate_ideals(ring, limits)
    proper = [ideal for ideal in ideals if ideal != ring.unit]
    return [
        ideal
        for ideal in proper
        if not any(other != ideal and is_contained(ideal, other) for other in proper)
    ]


def second_ideals(ring: RingSpec, limits: Limits = DEFAULT_LIMITS) -> List[Ideal]:
    """Proper second ideals (the set ``Spec^s(R)`` of graph vertices) in enumeration order.

    A field is second over itself but has no vertices, so it contributes nothing here.
    """
    return [ideal for ideal in vertices(ring, limits) if is_second(ring, ideal)]


def second_socle(ring: RingSpec, limits: Limits = DEFAULT_LIMITS) -> Ideal:
    """Sum of all second ideals; the zero ideal when there are none."""
    seconds = second_ideals(ring, limits)
    if not seconds:
        return ring.zero
    return reduce(lambda acc, ideal: ideal_sum(ring, acc, ideal), seconds)


def is_coreduced(ring: RingSpec) -> bool:
    """``rR = r^2R`` for every ``r``; equivalent to every modulus being squarefree."""
    return all(is_squarefree(n) for n in ring.components)


def is_sum_of_two_minimal(ring: RingSpec) -> bool:
    """Whether ``R = M1 (+) M2`` for its two minimal ideals."""
    minimal = minimal_ideals(ring)
    if len(minimal) != 2:
        return False
    first, second = minimal
    return ideal_sum(ring, first, second) == ring.unit and intersect(ring, first, second) == ring.zero


def is_sum_of_two_fields(ring: RingSpec) -> bool:
    """Whether ``R`` is a direct sum of two fields, i.e. has two maximal ideals meeting in zero."""
    maximal = maximal_ideals(ring)
    if len(maximal) != 2:
        return False
    return intersect(ring, maximal[0], maximal[1]) == ring.zero


def comultiplication_violations(ring: RingSpec, limits: Limits = DEFAULT_LIMITS) -> List[Ideal]:
    """Ideals with ``Ann(Ann(I)) != I``."""
    return [
        ideal
        for ideal in enumerate_ideals(ring, limits)
        if annihilator(ring, annihilator(ring, ideal)) != ideal
    ]


def is_comultiplication(ring: RingSpec, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Validate ``I = Ann(Ann(I))`` on every ideal instead of assuming it."""
    return not comultiplication_violations(ring, limits)


def crt_decomposition(n: int) -> RingSpec:
    """``Z_n`` as the product of its prime-power parts, ascending by prime."""
    return RingSpec(tuple(factorize(n).prime_powers()))


def crt_image(decomposed: RingSpec, ideal: Ideal) -> Ideal:
    """Image of a cyclic ideal ``<d>`` under ``Z_n -> prod Z_(p^e)``: ``(gcd(d, p^e))_p``.

    Raises:
        DomainError: If the ideal is not an ideal of a cyclic ring.
    """
    if len(ideal.gens) != 1:
        raise DomainError(f"{ideal} is not an ideal of a cyclic ring.")
    return decomposed.ideal(*(ideal.gens * len(decomposed.components)))


def permute_components(ring: RingSpec, order: Tuple[int, ...]) -> Tuple[RingSpec, Dict[Ideal, Ideal]]:
    """Reorder the components of a product and map every ideal along.

    Args:
        ring (RingSpec): The ring.
        order (Tuple[int, ...]): A permutation of component positions.

    Returns:
        Tuple[RingSpec, Dict[Ideal, Ideal]]: The permuted ring and the induced ideal map.

    Raises:
        DomainError: If ``order`` is not a permutation of the component positions.
    """
    if sorted(order) != list(range(len(ring.components))):
        raise DomainError(f"{order} is not a permutation of {len(ring.components)} components.")
    permuted = RingSpec(tuple(ring.components[i] for i in order))
    mapping = {ideal: Ideal(tuple(ideal.gens[i] for i in order)) for ideal in enumerate_ideals(ring)}
    return permuted, mapping


def classify(ring: RingSpec, ideal: Ideal) -> IdealClassification:
    """Collect the fast-path flags of one ideal."""
    return IdealClassification(
        ideal=ideal,
        is_zero=ideal == ring.zero,
        is_unit=ideal == ring.unit,
        is_second=is_second(ring, ideal),
        is_prime=is_prime_ideal(ring, ideal),
        is_minimal=is_minimal(ring, ideal),
        is_maximal=is_maximal(ring, ideal),
    )


# Element-level oracles
#
# Elements live in a cached integer table whose row ``j`` is the ``j``-th
# element of `ring_elements`, so the mixed-radix code of an element equals its
# row index. Products are evaluated a block of rows at a time.

_BLOCK_CELLS = 1 << 18


def ring_elements(ring: RingSpec) -> Iterator[Element]:
    """Every element as a tuple of residues."""
    return itertools.product(*(range(n) for n in ring.components))


def ideal_elements(ring: RingSpec, ideal: Ideal) -> FrozenSet[Element]:
    """The elements of an ideal: multiples of ``di`` in every component."""
    return frozenset(itertools.product(*(range(0, n, d) for n, d in zip(ring.components, ideal.gens))))


@lru_cache(maxsize=8)
def _element_table(ring: RingSpec) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    table = np.array(list(ring_elements(ring)), dtype=np.int64).reshape(ring.order, len(ring.components))
    moduli = np.array(ring.components, dtype=np.int64)
    weights = np.array([math.prod(ring.components[i + 1 :]) for i in range(len(ring.components))], dtype=np.int64)
    for array in (table, moduli, weights):
        array.setflags(write=False)
    return table, moduli, weights


def _membership(ring: RingSpec, ideal: Ideal) -> np.ndarray:
    table, _, _ = _element_table(ring)
    return np.all(table % np.array(ideal.gens, dtype=np.int64) == 0, axis=1)


def _blocks(count: int, width: int) -> Iterator[slice]:
    step = max(1, _BLOCK_CELLS // max(1, width))
    for start in range(0, count, step):
        yield slice(start, min(count, start + step))


def is_second_oracle(ring: RingSpec, ideal: Ideal, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Literal definition: ``I != 0`` and every ``r`` gives ``rI = 0`` or ``rI = I``.

    ``rI`` is compared with ``I`` as a sorted array of element codes.

    Raises:
        CapExceededError: If the ring order is above the oracle cap.
    """
    limits.check("oracle_order", ring.order)
    table, moduli, weights = _element_table(ring)
    members = table[_membership(ring, ideal)]
    if len(members) == 1:
        return False
    target = np.sort(members @ weights)
    for rows in _blocks(len(table), members.size):
        scaled = np.sort(((table[rows, None, :] * members[None, :, :]) % moduli) @ weights, axis=1)
        is_zero = ~scaled.any(axis=1)
        is_whole = (scaled == target).all(axis=1)
        if not np.all(is_zero | is_whole):
            return False
    return True


def is_prime_ideal_oracle(ring: RingSpec, ideal: Ideal, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Literal definition: ``I`` proper and ``ab in I`` forces ``a in I`` or ``b in I``."""
    limits.check("oracle_order", ring.order)
    table, moduli, weights = _element_table(ring)
    inside = _membership(ring, ideal)
    outside = table[~inside]
    if not len(outside):
        return False
    for rows in _blocks(len(outside), outside.size):
        products = ((outside[rows, None, :] * outside[None, :, :]) % moduli) @ weights
        if inside[products].any():
            return False
    return True


def annihilator_oracle(ring: RingSpec, ideal: Ideal, limits: Limits = DEFAULT_LIMITS) -> FrozenSet[Element]:
    """Elements ``r`` with ``rI = 0``."""
    limits.check("oracle_order", ring.order)
    table, moduli, _ = _element_table(ring)
    members = table[_membership(ring, ideal)]
    killed = np.zeros(len(table), dtype=bool)
    for rows in _blocks(len(table), members.size):
        killed[rows] = ~((table[rows, None, :] * members[None, :, :]) % moduli).any(axis=(1, 2))
    return frozenset(tuple(row) for row in table[killed].tolist())


def is_coreduced_oracle(ring: RingSpec, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Literal definition: ``rR = r^2R`` for every element ``r``.

    ``r^2R`` always lies in ``rR``, so equality is tested as ``r in r^2R``.
    """
    limits.check("oracle_order", ring.order)
    table, moduli, weights = _element_table(ring)
    squares = (table * table) % moduli
    codes = np.arange(len(table))
    for rows in _blocks(len(table), table.size):
        multiples = ((squares[rows, None, :] * table[None, :, :]) % moduli) @ weights
        if not (multiples == codes[rows, None]).any(axis=1).all():
            return False
    return True


@lru_cache(maxsize=64)
def _ideals_by_elements(ring: RingSpec, limits: Limits) -> Dict[FrozenSet[Element], Ideal]:
    limits.check("oracle_order", ring.order)
    return {ideal_elements(ring, ideal): ideal for ideal in enumerate_ideals(ring, limits)}


def ideal_from_elements(ring: RingSpec, elements: FrozenSet[Element], limits: Limits = DEFAULT_LIMITS) -> Ideal:
    """Name the ideal whose element set is ``elements``.

    Raises:
        DomainError: If the set is not an ideal of the ring.
    """
    try:
        return _ideals_by_elements(ring, limits)[frozenset(elements)]
    except KeyError:
        raise DomainError(f"Element set of size {len(elements)} is not an ideal of {ring}") from None


def intersect_oracle(ring: RingSpec, first: Ideal, second: Ideal, limits: Limits = DEFAULT_LIMITS) -> Ideal:
    """Intersection computed on element sets."""
    return ideal_from_elements(ring, ideal_elements(ring, first) & ideal_elements(ring, second), limits)


def sum_oracle(ring: RingSpec, first: Ideal, second: Ideal, limits: Limits = DEFAULT_LIMITS) -> Ideal:
    """Sum computed on element sets as ``{a + b}``."""
    limits.check("oracle_order", ring.order)
    table, moduli, _ = _element_table(ring)
    left, right = table[_membership(ring, first)], table[_membership(ring, second)]
    sums = (left[:, None, :] + right[None, :, :]) % moduli
    elements = frozenset(tuple(row) for row in np.unique(sums.reshape(-1, len(moduli)), axis=0).tolist())
    return ideal_from_elements(ring, elements, limits)
