import argparse

from rich.console import Console

from transcert.cli.common import (
    ExitCode,
    add_equation_arguments,
    add_output_argument,
    add_stream_arguments,
    build_run_config,
    digit_stream,
    locate_roots,
    print_json,
)
from transcert.digits.stats import stat_tests
from transcert.model.config import Command, OutputFormat
from transcert.model.output import StatisticName
from transcert.results.console import render_stats

COMMAND_NAME = str(Command.STATS)


def add_sub_commands(subparsers: argparse._SubParsersAction) -> None:
    """Adds the sub command options for the stats module"""
    stats_parser = subparsers.add_parser(
        COMMAND_NAME, help="Run randomness diagnostics over certified digits of a root of an equation."
    )
    add_equation_arguments(stats_parser)
    add_stream_arguments(stats_parser)
    stats_parser.add_argument("--count", required=True, type=int, help="How many digits to test.")
    stats_parser.add_argument(
        "--tests",
        required=False,
        nargs="+",
        choices=[str(s) for s in StatisticName],
        default=[str(s) for s in StatisticName],
        help="Which statistics to compute. Defaults to all of them",
    )
    add_output_argument(stats_parser)


def run_action(args: argparse.Namespace, console: Console) -> ExitCode:
    config = build_run_config(args, Command.STATS, count=args.count)
    located = locate_roots(config)
    if not located.roots:
        console.print(f"[yellow]No roots of {located.text} found[/yellow]")
        return ExitCode.NO_ROOTS

    digits = digit_stream(config, located).read(config.count)
    report = stat_tests(digits, config.tests, config.base)
    if config.output == OutputFormat.JSON:
        print_json(console, report.to_dict())
    else:
        render_stats(console, report)
    return ExitCode.OK
