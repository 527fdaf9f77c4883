import argparse
import logging
import sys
from pathlib import Path

from rich.console import Console

from transcert.cli.common import (
    ExitCode,
    add_equation_arguments,
    add_stream_arguments,
    build_run_config,
    digit_stream,
    locate_roots,
)
from transcert.digits.cipher import keystream, xor_cipher
from transcert.model.config import Command

logger = logging.getLogger(__name__)

COMMAND_NAME = str(Command.ENCRYPT)


def add_sub_commands(subparsers: argparse._SubParsersAction) -> None:
    """Adds the sub command options for the encrypt module"""
    encrypt_parser = subparsers.add_parser(
        COMMAND_NAME,
        help="XOR a message with a keystream from a root (running it again decrypts). A demonstration only.",
    )
    add_equation_arguments(encrypt_parser)
    add_stream_arguments(encrypt_parser, base=False)
    encrypt_parser.add_argument("--input", dest="input_file", required=False, help="Message file. Defaults to stdin")
    encrypt_parser.add_argument(
        "--output", dest="output_file", required=False, help="Destination file. Defaults to stdout"
    )


def run_action(args: argparse.Namespace, console: Console) -> ExitCode:
    config = build_run_config(args, Command.ENCRYPT)
    message = Path(args.input_file).read_bytes() if args.input_file else sys.stdin.buffer.read()
    located = locate_roots(config)
    if not located.roots:
        console.print(f"[yellow]No roots of {located.text} found[/yellow]")
        return ExitCode.NO_ROOTS

    if not message:
        logger.warning("Empty message - nothing to encrypt")
        ciphertext = b""
    else:
        ciphertext = xor_cipher(keystream(digit_stream(config, located), len(message), config.offset), message)

    if args.output_file:
        Path(args.output_file).write_bytes(ciphertext)
    else:
        sys.stdout.buffer.write(ciphertext)
        sys.stdout.buffer.flush()
    return ExitCode.OK
