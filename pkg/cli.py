"""Ring graph command line tool."""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from config import (
    DOMINATION_VERTEX_CAP,
    IDEAL_COUNT_CAP,
    ISOMORPHISM_VERTEX_CAP,
    LOG_FORMAT,
    LOG_LEVEL,
    ORACLE_ORDER_CAP,
    SWEEP_JOBS,
    SWEEP_NMAX,
    SWEEP_PRODUCTS_UP_TO,
)
from constant import ExitCode, GraphKind, PredicateMethod
from ring_graphs import CapExceededError, DomainError, Limits, RingSpec, build_graph
from ring_graphs.common_utils import parse_claim_list
from ring_graphs.errors import ArithmeticOverflowError
from ring_graphs.report import (
    dump_json,
    graph_report,
    graph_to_dot,
    ideals_report,
    ideals_text,
    sweep_report,
    validate_report,
)
from ring_graphs.theorems import claim_ids, ring_family, sweep

logger = logging.getLogger("ring_graphs.cli")


class CliParser(argparse.ArgumentParser):
    """Argument parser reporting usage errors with the domain-error exit code."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(ExitCode.DOMAIN_ERROR, f"{self.prog}: error: {message}\n")


def _limits(args: argparse.Namespace) -> Limits:
    return Limits(
        ideal_count=args.ideal_cap,
        oracle_order=args.oracle_cap,
        domination_vertices=args.domination_cap,
        isomorphism_vertices=args.iso_cap,
    )


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
        logger.info("Wrote %s", output)
    else:
        sys.stdout.write(text)


def _emit_json(data: dict, output: Optional[str]) -> None:
    validate_report(data)
    _emit(dump_json(data), output)


def cmd_ideals(args: argparse.Namespace) -> int:
    """List the ideals of a ring with their classification flags."""
    ring = RingSpec.parse(args.ring)
    limits = _limits(args)
    if args.format == "json":
        _emit_json(ideals_report(ring, limits), args.output)
    else:
        _emit(ideals_text(ring, limits), args.output)
    return ExitCode.SUCCESS


def cmd_graph(args: argparse.Namespace) -> int:
    """Write one ideal graph as DOT or JSON."""
    ring = RingSpec.parse(args.ring)
    graph = build_graph(ring, GraphKind(args.kind), PredicateMethod(args.method), _limits(args))
    if args.format == "dot":
        _emit(graph_to_dot(graph, ring), args.output)
    else:
        _emit_json(graph_report(ring, graph), args.output)
    return ExitCode.SUCCESS


def cmd_analyze(args: argparse.Namespace) -> int:
    """Write the invariant report of one ideal graph."""
    ring = RingSpec.parse(args.ring)
    limits = _limits(args)
    graph = build_graph(ring, GraphKind(args.kind), PredicateMethod(args.method), limits)
    invariants = graph.invariants(limits)
    _emit_json(graph_report(ring, graph, invariants), args.output)
    if args.domination and invariants.domination_number is None:
        logger.error("Domination number requested but %s has %d vertices", ring, graph.vertex_count)
        return ExitCode.CAP_EXCEEDED
    return ExitCode.SUCCESS


def cmd_verify(args: argparse.Namespace) -> int:
    """Sweep claims over a ring family and report failures through the exit code."""
    ids = parse_claim_list(args.claims, claim_ids())
    explicit = [RingSpec.parse(spec) for spec in args.ring or []]
    rings = ring_family(args.nmax, args.products_up_to, explicit)
    report = sweep(ids, rings, _limits(args), jobs=args.jobs)
    _emit_json(sweep_report(report), args.output)

    for status, count in report.summary.items():
        logger.info("%s: %d", status, count)
    if report.failures:
        for result in report.failures:
            logger.warning("FAIL %s on %s", result.claim_id, result.ring)
        return ExitCode.CLAIM_FAILURE
    return ExitCode.SUCCESS


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with its four subcommands."""
    parser = CliParser(prog="cli.py", description="Second ideal intersection graphs of finite rings.")
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level.")
    parser.add_argument("--ideal-cap", type=int, default=IDEAL_COUNT_CAP, help="Maximum ideal count per ring.")
    parser.add_argument("--oracle-cap", type=int, default=ORACLE_ORDER_CAP, help="Maximum ring order for oracles.")
    parser.add_argument(
        "--domination-cap", type=int, default=DOMINATION_VERTEX_CAP, help="Maximum vertex count for exact domination."
    )
    parser.add_argument(
        "--iso-cap", type=int, default=ISOMORPHISM_VERTEX_CAP, help="Maximum vertex count for isomorphism search."
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    ideals = subparsers.add_parser("ideals", help="List ideals and their classification.")
    ideals.add_argument("--ring", required=True, help="Ring spec such as 24 or 4x2x9.")
    ideals.add_argument("--format", choices=["text", "json"], default="text")
    ideals.add_argument("--output", help="Write to this file instead of stdout.")
    ideals.set_defaults(handler=cmd_ideals)

    for name, handler, help_text in (
        ("graph", cmd_graph, "Write an ideal graph."),
        ("analyze", cmd_analyze, "Compute graph invariants."),
    ):
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("--ring", required=True, help="Ring spec such as 24 or 4x2x9.")
        sub.add_argument("--kind", choices=[kind.value for kind in GraphKind], default=GraphKind.SII.value)
        sub.add_argument("--method", choices=[method.value for method in PredicateMethod], default="fast")
        sub.add_argument("--output", help="Write to this file instead of stdout.")
        sub.set_defaults(handler=handler)
        if name == "graph":
            sub.add_argument("--format", choices=["dot", "json"], default="dot")
        else:
            sub.add_argument(
                "--domination", action="store_true", help="Exit with code 3 if the domination number is capped."
            )

    verify = subparsers.add_parser("verify", help="Check claims over a family of rings.")
    verify.add_argument("--claims", default="all", help="Comma separated claim ids, or 'all'.")
    verify.add_argument("--nmax", type=int, default=SWEEP_NMAX, help="Sweep Z_n for 2 <= n <= NMAX.")
    verify.add_argument(
        "--products-up-to", type=int, default=SWEEP_PRODUCTS_UP_TO, help="Add prime-power products up to this order."
    )
    verify.add_argument("--ring", action="append", help="Extra ring spec; may be repeated.")
    verify.add_argument("--jobs", type=int, default=SWEEP_JOBS, help="Worker processes.")
    verify.add_argument("--output", help="Write the JSON report to this file instead of stdout.")
    verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run a subcommand and map errors to exit codes."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else LOG_LEVEL, format=LOG_FORMAT, stream=sys.stderr)
    try:
        return args.handler(args)
    except CapExceededError as e:
        logger.error(str(e))
        return ExitCode.CAP_EXCEEDED
    except (DomainError, ArithmeticOverflowError) as e:
        logger.error(str(e))
        return ExitCode.DOMAIN_ERROR


def run_cli() -> None:
    """Start the command line tool."""
    sys.exit(main())


if __name__ == "__main__":
    run_cli()
