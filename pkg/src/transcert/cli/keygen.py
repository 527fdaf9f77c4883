import argparse
import sys

from rich.console import Console

from transcert.cli.common import (
    ExitCode,
    add_equation_arguments,
    add_stream_arguments,
    build_run_config,
    digit_stream,
    locate_roots,
)
from transcert.digits.cipher import keystream
from transcert.model.config import Command

COMMAND_NAME = str(Command.KEYGEN)


def add_sub_commands(subparsers: argparse._SubParsersAction) -> None:
    """Adds the sub command options for the keygen module"""
    keygen_parser = subparsers.add_parser(
        COMMAND_NAME,
        help="Emit a demonstration keystream built from the hex digits of a root (NOT cryptographically secure).",
    )
    add_equation_arguments(keygen_parser)
    add_stream_arguments(keygen_parser, base=False)
    keygen_parser.add_argument("--bytes", required=True, type=int, help="Keystream length in bytes.")
    keygen_parser.add_argument(
        "--raw",
        required=False,
        action="store_true",
        help="Write raw bytes to stdout instead of lowercase hex.",
    )


def run_action(args: argparse.Namespace, console: Console) -> ExitCode:
    config = build_run_config(args, Command.KEYGEN, count=args.bytes)
    located = locate_roots(config)
    if not located.roots:
        console.print(f"[yellow]No roots of {located.text} found[/yellow]")
        return ExitCode.NO_ROOTS

    key = keystream(digit_stream(config, located), config.count, config.offset)
    if args.raw:
        sys.stdout.buffer.write(key)
        sys.stdout.buffer.flush()
    else:
        console.out(key.hex(), highlight=False)
    return ExitCode.OK
