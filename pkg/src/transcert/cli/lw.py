import argparse

from rich.console import Console

from transcert.certify.combine import certify_lw_combination
from transcert.cli.certify import print_certificate
from transcert.cli.common import (
    ExitCode,
    add_output_argument,
    add_precision_arguments,
    build_run_config,
    parse_algebraic,
    parse_rational,
)
from transcert.error import ConfigError
from transcert.model.config import Command

COMMAND_NAME = str(Command.LW)


def add_sub_commands(subparsers: argparse._SubParsersAction) -> None:
    """Adds the sub command options for the lw module"""
    lw_parser = subparsers.add_parser(
        COMMAND_NAME, help="Evaluate and certify c_1 e^a_1 + ... + c_n e^a_n (rational c_i, distinct algebraic a_i)."
    )
    lw_parser.add_argument(
        "--coefficients",
        required=True,
        nargs="+",
        metavar="C",
        help="Rational coefficients c_i, eg: 1 -1/2",
    )
    lw_parser.add_argument(
        "--exponents",
        required=True,
        nargs="+",
        metavar="A",
        help="Algebraic exponents a_i written as constant expressions, eg: 1 'sqrt(2)'",
    )
    add_precision_arguments(lw_parser)
    add_output_argument(lw_parser)


def run_action(args: argparse.Namespace, console: Console) -> ExitCode:
    config = build_run_config(args, Command.LW)
    if len(args.coefficients) != len(args.exponents):
        raise ConfigError(
            f"--coefficients has {len(args.coefficients)} value(s) but --exponents has {len(args.exponents)}"
        )
    try:
        coefficients = [parse_rational(c) for c in args.coefficients]
        exponents = [parse_algebraic(a) for a in args.exponents]
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    _, certificate = certify_lw_combination(coefficients, exponents, config.prec)
    return print_certificate(console, certificate, config.output)
