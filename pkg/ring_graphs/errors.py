"""Ring graph exceptions."""


class RingGraphError(Exception):
    """Base class for every error raised by the ring graph toolkit."""


class DomainError(RingGraphError, ValueError):
    """An argument lies outside the domain of the operation."""


class NoVerticesError(DomainError):
    """The ring has no non-zero proper ideals, so no graph can be built."""


class UnknownClaimError(DomainError):
    """A claim id is not present in the registry."""


class ArithmeticOverflowError(RingGraphError, OverflowError):
    """An integer result does not fit in 63 bits."""


class CapExceededError(RingGraphError):
    """A configured size cap was exceeded.

    Attributes:
        cap_name (str): Name of the cap, e.g. ``"ideal_count"``.
        limit (int): Configured limit.
        value (int): Offending value.
    """

    def __init__(self, cap_name: str, limit: int, value: int):
        self.cap_name = cap_name
        self.limit = limit
        self.value = value
        super().__init__(f"{cap_name} cap exceeded: {value} > {limit}")
