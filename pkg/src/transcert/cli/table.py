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
from transcert.digits.table import DEFAULT_GROUP_WIDTH, random_table
from transcert.model.config import Command, OutputFormat
from transcert.results.console import render_table

COMMAND_NAME = str(Command.TABLE)


def add_sub_commands(subparsers: argparse._SubParsersAction) -> None:
    """Adds the sub command options for the table module"""
    table_parser = subparsers.add_parser(
        COMMAND_NAME, help="Print a table of random digit groups taken from a root of an equation."
    )
    add_equation_arguments(table_parser)
    add_stream_arguments(table_parser)
    table_parser.add_argument("--rows", required=True, type=int, help="Number of table rows.")
    table_parser.add_argument("--cols", required=True, type=int, help="Number of digit groups per row.")
    table_parser.add_argument(
        "--width",
        required=False,
        type=int,
        default=DEFAULT_GROUP_WIDTH,
        help=f"Digits per group. Defaults to {DEFAULT_GROUP_WIDTH}",
    )
    add_output_argument(table_parser)


def run_action(args: argparse.Namespace, console: Console) -> ExitCode:
    config = build_run_config(args, Command.TABLE)
    located = locate_roots(config)
    if not located.roots:
        console.print(f"[yellow]No roots of {located.text} found[/yellow]")
        return ExitCode.NO_ROOTS

    table = random_table(digit_stream(config, located), config.rows, config.cols, config.width)
    if config.output == OutputFormat.JSON:
        print_json(console, table.to_dict())
    else:
        render_table(console, table)
    return ExitCode.OK
