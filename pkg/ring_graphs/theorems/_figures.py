"""Symbolic figure templates and their instantiation for cyclic rings."""

import re
from functools import lru_cache
from pathlib import Path
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

import yaml

from constant import GraphKind

from ..arith import factorize
from ..errors import DomainError
from ..ring import Ideal, RingSpec

_MONOMIAL = re.compile(r"([pqr])(?:\^(\d+))?")
_SYMBOLS = "pqr"

Edge = FrozenSet[Ideal]


@lru_cache(maxsize=1)
def load_figures() -> dict:
    """Load ``figures.yaml`` next to this module."""
    with open(Path(__file__).with_name("figures.yaml"), encoding="utf-8") as f:
        return yaml.safe_load(f)


def golden_rings() -> List[int]:
    """Moduli of the drawn golden instances."""
    return list(load_figures()["golden_rings"])


def evaluate_label(label: str, primes: Dict[str, int]) -> int:
    """Evaluate a monomial label such as ``p^2q`` at concrete primes.

    Raises:
        DomainError: If the label is malformed or uses an unassigned symbol.
    """
    if _MONOMIAL.sub("", label):
        raise DomainError(f"Malformed figure label '{label}'")
    value = 1
    for symbol, exponent in _MONOMIAL.findall(label):
        if symbol not in primes:
            raise DomainError(f"Figure label '{label}' uses unassigned symbol '{symbol}'")
        value *= primes[symbol] ** int(exponent or 1)
    return value


def shape_of(n: int) -> Tuple[Optional[str], Dict[str, int]]:
    """Find the template shape matching ``n`` and the prime assigned to each symbol.

    Primes are ordered by descending exponent, then ascending prime.

    Returns:
        Tuple[Optional[str], Dict[str, int]]: Shape key (``None`` when no template
        fits) and the symbol assignment.
    """
    pairs = sorted(factorize(n), key=lambda pair: (-pair[1], pair[0]))
    exponents = [e for _, e in pairs]
    for key, template in load_figures()["shapes"].items():
        if template["exponents"] == exponents:
            return key, {symbol: p for symbol, (p, _) in zip(_SYMBOLS, pairs)}
    return None, {}


def expected_figure(n: int, kind: GraphKind) -> Optional[Tuple[Set[Ideal], Set[Edge]]]:
    """Instantiate the drawn graph of ``kind`` for ``Z_n``.

    Returns:
        Optional[Tuple[Set[Ideal], Set[Edge]]]: Expected vertices and edges, or ``None``
        when no drawing exists for this shape and kind.
    """
    key, primes = shape_of(n)
    if key is None:
        return None
    template = load_figures()["shapes"][key]
    if kind.value not in template:
        return None
    ring = RingSpec.cyclic(n)

    def to_ideal(label: str) -> Ideal:
        value = evaluate_label(label, primes)
        if n % value or value in (1, n):
            raise DomainError(f"Label '{label}' is not a proper divisor of {n}")
        return ring.ideal(value)

    expected_vertices = {to_ideal(label) for label in template["vertices"]}
    expected_edges = {frozenset((to_ideal(a), to_ideal(b))) for a, b in template[kind.value]}
    if len(expected_vertices) != len(template["vertices"]):
        raise DomainError(f"Figure template '{key}' has duplicate vertices")
    return expected_vertices, expected_edges
