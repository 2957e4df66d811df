"""
Command-line front end.

    python -m src graph --builtin even --max-n 4 --report criteria
    python -m src updown --max-n 8 --report witnesses --format json
    python -m src sgap --gaps 1,2 --max-n 4 --depth 4
    python -m src coded --builtin golden-mean --separator 2 --max-n 3
    python -m src oracle-check --updown --max-n 3 --depth 10

Reports go to stdout (or --out), logs to stderr. Exit status is 0 on
success, 2 when a budget is exceeded and 1 for every other error.
"""

import argparse
import logging
import sys
from collections.abc import Sequence
from typing import NoReturn

from config.settings import settings
from pydantic import ValidationError

from src.application.report import AnalysisReport, ReportKind
from src.domain.exceptions import BudgetExceededError, DomainError
from src.infrastructure.report_writer import OutputFormat, render, write_report
from src.presentation.dependencies import build_analysis, build_cross_check
from src.presentation.schemas import Command, RunConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_BUDGET = 2

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

ANALYSIS_REPORTS = [
    str(kind) for kind in ReportKind if kind != ReportKind.ORACLE_CHECK
]


class UsageError(Exception):
    """Raised instead of argparse's exit so usage errors share the error exit status."""

    pass


class CliArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _add_common(parser: argparse.ArgumentParser, *, report: bool = True) -> None:
    parser.add_argument("--max-n", type=int, default=5, help="largest word length (default 5)")
    parser.add_argument(
        "--depth", type=int, default=None, help="oracle depth (default from settings)"
    )
    if report:
        parser.add_argument(
            "--report", choices=ANALYSIS_REPORTS, default=str(ReportKind.FOLLOWERS)
        )
    parser.add_argument("--format", choices=[str(f) for f in OutputFormat], default="csv")
    parser.add_argument("--out", default=None, help="output file (default stdout)")
    parser.add_argument("--budget", type=int, default=None, help="membership calls per profile")
    parser.add_argument("--log-level", default=None, help="logging level (default from settings)")


def _add_graph_source(parser: argparse.ArgumentParser, *, updown: bool = False) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--file", help="presentation file")
    group.add_argument("--builtin", help="built-in presentation name")
    if updown:
        group.add_argument("--updown", action="store_true", help="use the up/down/equals shift")


def build_parser() -> argparse.ArgumentParser:
    parser = CliArgumentParser(
        prog="follower-sets",
        description="Count follower, predecessor and extender sets and check soficity criteria.",
    )
    commands = parser.add_subparsers(dest="command", required=True, parser_class=CliArgumentParser)

    graph = commands.add_parser(Command.GRAPH, help="exact tables and criteria for a graph")
    _add_graph_source(graph)
    _add_common(graph)

    updown = commands.add_parser(Command.UPDOWN, help="the up/down/equals shift")
    _add_common(updown)
    updown.add_argument("--cap", type=int, default=None, help="length cap for exact tables")

    sgap = commands.add_parser(Command.SGAP, help="S-gap shift (depth-limited)")
    gap_source = sgap.add_mutually_exclusive_group()
    gap_source.add_argument("--gaps", help="explicit gap list, e.g. 1,2,5")
    gap_source.add_argument("--gap-rule", help="named gap set: powers-of-2, even, odd")
    sgap.add_argument("--cutoff", type=int, default=None, help="search cutoff for --gap-rule")
    _add_common(sgap)

    coded = commands.add_parser(Command.CODED, help="coded system over a graph (depth-limited)")
    _add_graph_source(coded)
    coded.add_argument("--separator", help="separator letter absent from the graph alphabet")
    _add_common(coded)

    check = commands.add_parser(Command.ORACLE_CHECK, help="exact counts against the oracle")
    _add_graph_source(check, updown=True)
    check.add_argument("--cap", type=int, default=None, help="length cap for updown tables")
    _add_common(check, report=False)
    return parser


def configure_logging(level: str | None) -> None:
    """
    Send logs to stderr at the requested level.

    Raises:
        UsageError: If the level name is unknown
    """
    name = (level or settings.log_level).upper()
    if name not in logging.getLevelNamesMapping():
        raise UsageError(f"follower-sets: error: unknown log level '{level}'")
    logging.basicConfig(
        level=name,
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )


def run(config: RunConfig) -> AnalysisReport:
    """Execute one validated run and return its report."""
    depth = config.depth or settings.default_depth
    if config.command == Command.ORACLE_CHECK:
        return build_cross_check(config).execute(config.max_n, depth)
    return build_analysis(config).execute(config.report, config.max_n, depth)


def main(argv: Sequence[str] | None = None) -> int:
    """
    Parse arguments, run, and emit the report.

    Returns:
        Process exit status
    """
    try:
        args = build_parser().parse_args(argv)
        configure_logging(args.log_level)
        config = RunConfig.model_validate(vars(args))
    except UsageError as e:
        sys.stderr.write(f"{e}\n")
        return EXIT_ERROR
    except ValidationError as e:
        for error in e.errors():
            location = ".".join(str(part) for part in error["loc"]) or "arguments"
            sys.stderr.write(f"follower-sets: error: {location}: {error['msg']}\n")
        return EXIT_ERROR

    try:
        report = run(config)
    except BudgetExceededError as e:
        logger.warning(f"Run aborted: {e}")
        sys.stderr.write(f"follower-sets: {e}\n")
        return EXIT_BUDGET
    except DomainError as e:
        logger.warning(f"Run failed: {e}")
        sys.stderr.write(f"follower-sets: {e}\n")
        return EXIT_ERROR

    if config.out:
        write_report(report, config.format, config.out)
    else:
        sys.stdout.write(render(report, config.format))
    return EXIT_OK
