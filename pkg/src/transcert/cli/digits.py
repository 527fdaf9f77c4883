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
from transcert.model.config import Command, OutputFormat
from transcert.model.output import DigitsOutput
from transcert.results.console import render_digits

COMMAND_NAME = str(Command.DIGITS)


def add_sub_commands(subparsers: argparse._SubParsersAction) -> None:
    """Adds the sub command options for the digits module"""
    digits_parser = subparsers.add_parser(COMMAND_NAME, help="Print certified digits of a root of an equation.")
    add_equation_arguments(digits_parser)
    add_stream_arguments(digits_parser)
    digits_parser.add_argument("--count", required=True, type=int, help="How many fractional digits to print.")
    add_output_argument(digits_parser)


def run_action(args: argparse.Namespace, console: Console) -> ExitCode:
    config = build_run_config(args, Command.DIGITS, count=args.count)
    located = locate_roots(config)
    if not located.roots:
        console.print(f"[yellow]No roots of {located.text} found[/yellow]")
        return ExitCode.NO_ROOTS

    stream = digit_stream(config, located)
    sign, integer_part = stream.integer_part()
    output = DigitsOutput(
        base=stream.base,
        offset=stream.cursor,
        sign=sign,
        integer_part=integer_part,
        digits=stream.read(config.count),
        source=stream.source,
        root_index=stream.root_index,
        component=stream.component,
    )

    if config.output == OutputFormat.JSON:
        print_json(console, output.to_dict())
    else:
        render_digits(console, output)
    return ExitCode.OK
