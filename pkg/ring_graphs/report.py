"""DOT and JSON renderings of rings, graphs and sweeps."""

import json
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Optional

import jsonschema

from constant import REPORT_SCHEMA_FILENAME, REPORT_SCHEMA_VERSION

from .graph import IdealGraph, InvariantReport
from .limits import DEFAULT_LIMITS, Limits
from .ring import RingSpec, classify, enumerate_ideals, is_coreduced, second_socle, vertices
from .theorems import ClaimResult, SweepReport

SCHEMA_PATH = Path(__file__).resolve().parent.parent / REPORT_SCHEMA_FILENAME


def graph_to_dot(graph: IdealGraph, ring: RingSpec) -> str:
    """Render a graph in the DOT language.

    Edges come first in vertex order, then every isolated vertex as a bare node
    statement. Identifiers are double quoted.

    Args:
        graph (IdealGraph): The graph.
        ring (RingSpec): Its ring, used for the graph name ``<kind>_<spec>``.

    Returns:
        str: The DOT source, newline terminated.
    """
    lines = [f"graph {graph.kind.value}_{ring} {{"]
    for a, b in graph.edges():
        lines.append(f'  "{a.render()}" -- "{b.render()}";')
    for ideal in graph.isolated_vertices():
        lines.append(f'  "{ideal.render()}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_report(
    ring: RingSpec,
    graph: IdealGraph,
    invariants: Optional[InvariantReport] = None,
    claims: Iterable[ClaimResult] = (),
) -> dict:
    """JSON report of one graph: vertices, edges and optionally invariants and claims."""
    report = {
        "schema_version": REPORT_SCHEMA_VERSION,
        "ring": str(ring),
        "kind": graph.kind.value,
        "vertices": [ideal.render() for ideal in graph.vertices],
        "edges": [[a.render(), b.render()] for a, b in graph.edges()],
    }
    if invariants is not None:
        report["invariants"] = invariants.to_dict()
    report["claims"] = [result.to_dict() for result in claims]
    return report


def ideals_report(ring: RingSpec, limits: Limits = DEFAULT_LIMITS) -> dict:
    """JSON listing of every ideal of the ring with its classification flags."""
    return {
        "schema_version": REPORT_SCHEMA_VERSION,
        "ring": str(ring),
        "order": ring.order,
        "ideals": [classify(ring, ideal).to_dict() for ideal in enumerate_ideals(ring, limits)],
        "vertices": [ideal.render() for ideal in vertices(ring, limits)],
        "second_socle": second_socle(ring, limits).render(),
        "coreduced": is_coreduced(ring),
    }


def ideals_text(ring: RingSpec, limits: Limits = DEFAULT_LIMITS) -> str:
    """Plain-text table of the ideals of a ring."""
    flags = ("zero", "unit", "second", "prime", "minimal", "maximal")
    rows = [classify(ring, ideal).to_dict() for ideal in enumerate_ideals(ring, limits)]
    width = max(len("ideal"), *(len(row["ideal"]) for row in rows))
    lines = [f"Ring {ring.display} ({len(rows)} ideals, {len(rows) - 2} vertices)"]
    lines.append("ideal".ljust(width) + "  " + "  ".join(flags))
    for row in rows:
        cells = "  ".join(("yes" if row[flag] else "-").ljust(len(flag)) for flag in flags)
        lines.append(row["ideal"].ljust(width) + "  " + cells.rstrip())
    lines.append(f"second socle: {second_socle(ring, limits).render()}")
    return "\n".join(lines) + "\n"


def sweep_report(report: SweepReport) -> dict:
    """JSON report of a sweep with its summary and per-claim tallies."""
    return {"schema_version": REPORT_SCHEMA_VERSION, **report.to_dict()}


@lru_cache(maxsize=1)
def load_schema() -> dict:
    """Load the report JSON schema shipped at the repository root."""
    with open(SCHEMA_PATH, encoding="utf-8") as f:
        return json.load(f)


def validate_report(data: dict) -> None:
    """Validate a report against the schema.

    Raises:
        jsonschema.ValidationError: If the report does not conform.
    """
    jsonschema.validate(instance=data, schema=load_schema())


def dump_json(data: dict) -> str:
    """Serialize a report with stable formatting."""
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"
