"""Ring graph common utilities."""

import logging
import math
import re
from functools import wraps
from typing import Any, Callable, List, Optional, Sequence

from constant import ExtendedInt

from .errors import CapExceededError, DomainError

logger = logging.getLogger(__name__)

_CLAIM_SEPARATOR = re.compile(r"[,\s]+")


def extended_to_json(value: ExtendedInt) -> Optional[int]:
    """Serialize an extended integer: finite values as ``int``, infinity as ``None``.

    Args:
        value (ExtendedInt): A finite integer or ``math.inf``.

    Returns:
        Optional[int]: The JSON-ready value.
    """
    if isinstance(value, float) and math.isinf(value):
        return None
    return int(value)


def parse_claim_list(text: str, known_ids: Sequence[str]) -> List[str]:
    """Parse a ``--claims`` argument such as ``"all"`` or ``"T-conn,T-isol"``.

    Args:
        text (str): Comma or whitespace separated claim ids, or ``all``.
        known_ids (Sequence[str]): Registry ids in registry order.

    Returns:
        List[str]: Requested ids in registry order, duplicates removed.

    Raises:
        DomainError: If the list is empty.
    """
    requested = [token for token in _CLAIM_SEPARATOR.split(text.strip()) if token]
    if not requested:
        raise DomainError("No claim ids given.")
    if any(token.lower() == "all" for token in requested):
        return list(known_ids)
    order = {claim_id: position for position, claim_id in enumerate(known_ids)}
    unique = dict.fromkeys(requested)
    return sorted(unique, key=lambda claim_id: order.get(claim_id, len(order)))


def on_cap_exceeded(fallback: Callable[..., Any]) -> Callable:
    """A decorator factory turning a ``CapExceededError`` into a fallback value.

    The wrapped function runs normally; when it raises ``CapExceededError`` the
    error is logged and ``fallback(error, *args, **kwargs)`` is returned instead.

    Args:
        fallback (Callable[..., Any]): Builds the replacement result from the error
            and the original call arguments.

    Returns:
        Callable: The decorator.

    Example:
        @on_cap_exceeded(lambda error, ctx: ClaimResult.capped(..., error))
        def check(ctx):
            ...
    """

    def decorator(func: Callable[..., Any]) -> Callable[..., Any]:
        @wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            try:
                return func(*args, **kwargs)
            except CapExceededError as error:
                logger.warning("%s capped: %s", func.__name__, error)
                return fallback(error, *args, **kwargs)

        return wrapper

    return decorator
