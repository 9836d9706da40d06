"""Ring graph constants."""

import math
from enum import Enum
from typing import Union

ExtendedInt = Union[int, float]

INFINITY = math.inf

REPORT_SCHEMA_VERSION = "1.0"
REPORT_SCHEMA_FILENAME = "report.schema.json"

MAX_ORDER = 2**63 - 1


class GraphKind(Enum):
    """Graph kind enumeration."""

    SII = "sii"
    PIS = "pis"
    GAMMA = "gamma"


class PredicateMethod(Enum):
    """Which implementation of the ideal predicates a builder uses."""

    FAST = "fast"
    ORACLE = "oracle"


class ClaimStatus(Enum):
    """Claim result status enumeration."""

    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"
    CAPPED = "capped"


class ExitCode:
    """CLI exit code constants."""

    SUCCESS = 0
    DOMAIN_ERROR = 1
    CLAIM_FAILURE = 2
    CAP_EXCEEDED = 3


CLAIM_STATUSES = [status.value for status in ClaimStatus]
