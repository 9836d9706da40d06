"""Integer arithmetic primitives underlying every ideal computation."""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Tuple

from sympy import divisors as _sympy_divisors, factorint, isprime

from constant import MAX_ORDER

from .errors import ArithmeticOverflowError, DomainError


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a positive integer.

    Attributes:
        pairs (Tuple[Tuple[int, int], ...]): ``(prime, exponent)`` pairs, ascending by prime.
    """

    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        primes = [p for p, _ in self.pairs]
        if primes != sorted(set(primes)) or any(e < 1 for _, e in self.pairs):
            raise DomainError(f"Malformed factorization: {self.pairs}")

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def primes(self) -> List[int]:
        """List[int]: Distinct primes, ascending."""
        return [p for p, _ in self.pairs]

    @property
    def exponents(self) -> List[int]:
        """List[int]: Exponents in prime order."""
        return [e for _, e in self.pairs]

    def expand(self) -> int:
        """Recompose the factored integer."""
        return math.prod(p**e for p, e in self.pairs)

    def prime_powers(self) -> List[int]:
        """Return the prime-power parts ``p^e``, ascending by prime."""
        return [p**e for p, e in self.pairs]


def _check_range(n: int, lower: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"Expected an integer, got {n!r}")
    if n < lower or n > MAX_ORDER:
        raise DomainError(f"{n} is outside [{lower}, 2^63-1]")


@lru_cache(maxsize=None)
def factorize(n: int) -> Factorization:
    """Exact prime factorization of ``n``.

    Args:
        n (int): Integer in ``[2, 2^63 - 1]``.

    Returns:
        Factorization: The ``(prime, exponent)`` pairs of ``n``.

    Raises:
        DomainError: If ``n < 2`` or ``n`` does not fit in 63 bits.
    """
    _check_range(n, 2)
    return Factorization(tuple(sorted((int(p), int(e)) for p, e in factorint(n).items())))


@lru_cache(maxsize=None)
def _divisor_tuple(n: int) -> Tuple[int, ...]:
    return tuple(int(d) for d in _sympy_divisors(n))


def divisors(n: int) -> List[int]:
    """All positive divisors of ``n`` in ascending order.

    Args:
        n (int): Integer ``>= 1``.

    Returns:
        List[int]: Divisors of ``n``, ascending and duplicate-free.

    Raises:
        DomainError: If ``n < 1``.
    """
    _check_range(n, 1)
    return list(_divisor_tuple(n))


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two positive integers."""
    _check_range(a, 1)
    _check_range(b, 1)
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    """Least common multiple of two positive integers.

    Raises:
        DomainError: If an argument is below 1.
        ArithmeticOverflowError: If the result does not fit in 63 bits.
    """
    _check_range(a, 1)
    _check_range(b, 1)
    value = a // math.gcd(a, b) * b
    if value > MAX_ORDER:
        raise ArithmeticOverflowError(f"lcm({a}, {b}) = {value} overflows 63 bits")
    return value


def is_prime(n: int) -> bool:
    """Primality of ``n >= 1``."""
    _check_range(n, 1)
    return bool(isprime(n))


def is_squarefree(n: int) -> bool:
    """Whether no prime square divides ``n >= 1``."""
    _check_range(n, 1)
    if n == 1:
        return True
    return all(e == 1 for e in factorize(n).exponents)


def is_prime_power(n: int) -> bool:
    """Whether ``n`` is ``p^k`` with ``k >= 1``."""
    _check_range(n, 1)
    return n > 1 and len(factorize(n)) == 1


def omega(n: int) -> int:
    """Number of distinct prime factors of ``n >= 1``."""
    _check_range(n, 1)
    return 0 if n == 1 else len(factorize(n))
