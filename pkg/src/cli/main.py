"""
Command-line entry point for the quiver tool
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

import structlog

from config.settings import (
    COMMANDS,
    DEFAULT_KOETHE_MODE,
    DIMSEQ_DEFAULT_CAP,
    KOETHE_MODES,
    LOG_FORMAT,
    LOG_LEVEL,
    TOWER_STEP_CAP,
)
from src.cli.commands import RunOptions, run
from src.utils.exceptions import UsageError
from src.utils.logging_config import configure_logging


class QuiverToolParser(argparse.ArgumentParser):
    """Usage errors exit with status 1 like every other input error"""

    def error(self, message):
        raise UsageError(message)


def build_parser() -> QuiverToolParser:
    parser = QuiverToolParser(
        prog="quiver_tool",
        description="Classify valued quivers, enumerate indecomposables and roots, and decide the Köthe property",
    )
    parser.add_argument("command", choices=COMMANDS, help="Command to run")
    parser.add_argument(
        "inputs", nargs="*",
        help="Quiver file ('-' or nothing reads stdin); for dimseq: validate SEQ | list M | indecs SEQ",
    )
    parser.add_argument("--mode", default=DEFAULT_KOETHE_MODE, choices=KOETHE_MODES, help="Köthe decider to use")
    parser.add_argument("--expect", choices=["yes", "no"], help="Exit with status 2 when the verdict differs")
    parser.add_argument("--max-steps", type=int, default=TOWER_STEP_CAP, help="Coxeter tower step cap")
    parser.add_argument("--cap", type=int, default=DIMSEQ_DEFAULT_CAP, help="Largest entry for dimseq list")
    parser.add_argument("--json", action="store_true", help="Print the report as JSON")
    parser.add_argument("--dot", action="store_true", help="Print a Graphviz digraph (classify, separated)")
    parser.add_argument(
        "--log-level", default=LOG_LEVEL.upper(), type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="Log level",
    )
    parser.add_argument("--log-format", default=LOG_FORMAT, choices=["json", "console"], help="Log renderer")
    return parser


def _read_input(inputs: List[str]) -> str:
    if len(inputs) > 1:
        raise UsageError(f"expected at most one quiver file, got {len(inputs)}")
    if not inputs or inputs[0] == "-":
        return sys.stdin.read()
    path = Path(inputs[0])
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}")


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        configure_logging(args.log_level, args.log_format)
        options = RunOptions(
            mode=args.mode,
            expect=args.expect,
            max_steps=args.max_steps,
            json=args.json,
            dot=args.dot,
            cap=args.cap,
        )
        if args.command == "dimseq":
            if not 1 <= len(args.inputs) <= 2:
                raise UsageError("usage: dimseq validate SEQ | list M | indecs SEQ")
            options.action = args.inputs[0]
            options.argument = args.inputs[1] if len(args.inputs) == 2 else None
            text = ""
        else:
            text = _read_input(args.inputs)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1

    structlog.get_logger().debug("command_started", command=args.command)
    result = run(args.command, options, text)
    if result.error:
        print(f"error: {result.error}", file=sys.stderr)
    if result.output:
        sys.stdout.write(result.output)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
