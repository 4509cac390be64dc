"""
Command-line front end.

Exit codes: 0 on success, 1 on invalid input (bad sequence text, an
inadmissible sequence, or a line sequence where a cycle algebra is needed),
2 when a verification sweep finds counterexamples.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from algebra import (
    AdmissibilityError,
    NotCycleAlgebra,
    SequenceParseError,
    parse_sequence,
    render,
)
from quiver import decompose, f_map, to_dot
from retraction import chain_cycle_summary, retraction_chain
from verify import SuiteConfig, enumerate_admissible, registry_snapshot, run_suite
from verify.config import DEFAULT_C_MAX, DEFAULT_N_MAX

from .serialization import (
    analysis_payload,
    chain_payload,
    dimensions_payload,
    dumps,
    quiver_payload,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_VERIFICATION_FAILED = 2


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with the invalid-input code."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID_INPUT, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _add_bounds(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n-max", type=_positive_int, default=DEFAULT_N_MAX,
                        help=f"largest number of simples (default {DEFAULT_N_MAX})")
    parser.add_argument("--c-max", type=_positive_int, default=DEFAULT_C_MAX,
                        help=f"largest sequence entry (default {DEFAULT_C_MAX})")


def _claims_epilog() -> str:
    lines = ["claims checked:"]
    for name, description in registry_snapshot().items():
        lines.append(f"  {name}: {description}")
    return "\n".join(lines)


def setup_main_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subparser per subcommand."""
    parser = _Parser(
        prog="nakayama",
        description="Resolution quivers of connected Nakayama algebras.",
    )
    parser.add_argument("--verbose", action="store_true", help="log progress to stderr")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    analyze = subparsers.add_parser("analyze", help="classify a sequence and list its cycles")
    analyze.add_argument("sequence", help="admissible sequence, e.g. 3,3,3,4")
    analyze.add_argument("--json", action="store_true", help="JSON output (default)")

    quiver = subparsers.add_parser("quiver", help="print the resolution quiver")
    quiver.add_argument("sequence")
    output = quiver.add_mutually_exclusive_group()
    output.add_argument("--dot", action="store_true", help="Graphviz DOT output")
    output.add_argument("--json", action="store_true", help="JSON output (default)")

    dims = subparsers.add_parser("dims", help="projective/injective dimensions of the simples")
    dims.add_argument("sequence")
    dims.add_argument("--json", action="store_true", help="JSON output (default)")

    retract = subparsers.add_parser("retract", help="retraction chain and its cycle summary")
    retract.add_argument("sequence")
    retract.add_argument("--json", action="store_true", help="JSON output (default)")

    verify = subparsers.add_parser(
        "verify",
        help="check every claim over an enumeration",
        epilog=_claims_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    _add_bounds(verify)
    verify.add_argument("--workers", type=_positive_int, default=1,
                        help="worker processes (default 1)")
    verify.add_argument("--json", action="store_true",
                        help="print the JSON report instead of the summary table")
    verify.add_argument("--output", type=Path, help="also write the JSON report to this file")

    enumerate_parser = subparsers.add_parser("enumerate", help="list admissible sequences")
    _add_bounds(enumerate_parser)

    return parser


def _analyze(args: argparse.Namespace) -> int:
    sequence = parse_sequence(args.sequence)
    quiver = f_map(sequence)
    print(dumps(analysis_payload(sequence, quiver, decompose(quiver))))
    return EXIT_OK


def _quiver(args: argparse.Namespace) -> int:
    sequence = parse_sequence(args.sequence)
    quiver = f_map(sequence)
    decomposition = decompose(quiver)
    if args.dot:
        sys.stdout.write(to_dot(quiver, decomposition))
    else:
        print(dumps(quiver_payload(quiver, decomposition)))
    return EXIT_OK


def _dims(args: argparse.Namespace) -> int:
    sequence = parse_sequence(args.sequence)
    print(dumps(dimensions_payload(sequence)))
    return EXIT_OK


def _retract(args: argparse.Namespace) -> int:
    sequence = parse_sequence(args.sequence)
    chain = retraction_chain(sequence)
    print(dumps(chain_payload(chain, chain_cycle_summary(sequence))))
    return EXIT_OK


def _verify(args: argparse.Namespace) -> int:
    config = SuiteConfig(n_max=args.n_max, c_max=args.c_max, workers=args.workers)
    report = run_suite(config)
    if args.output is not None:
        args.output.write_text(dumps(report.to_dict()) + "\n", encoding="utf-8")
        logger.info("report written to %s", args.output)
    print(dumps(report.to_dict()) if args.json else report.summary_table())
    return EXIT_OK if report.ok else EXIT_VERIFICATION_FAILED


def _enumerate(args: argparse.Namespace) -> int:
    for sequence in enumerate_admissible(args.n_max, args.c_max):
        print(render(sequence))
    return EXIT_OK


_HANDLERS = {
    "analyze": _analyze,
    "quiver": _quiver,
    "dims": _dims,
    "retract": _retract,
    "verify": _verify,
    "enumerate": _enumerate,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, run one subcommand and return its exit code.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:].

    Returns:
        0 on success, 1 on invalid input, 2 on verification failures.
    """
    args = setup_main_parser().parse_args(argv)
    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    try:
        return _HANDLERS[args.command](args)
    except (SequenceParseError, AdmissibilityError, NotCycleAlgebra) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
