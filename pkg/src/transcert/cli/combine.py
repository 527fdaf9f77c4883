import argparse

from rich.console import Console

from transcert.certify import certify
from transcert.certify.combine import combine_complex
from transcert.certify.model import Certificate
from transcert.certify.number import certify_number
from transcert.cli.certify import print_certificate
from transcert.cli.common import (
    ExitCode,
    add_equation_arguments,
    add_output_argument,
    add_root_selection_arguments,
    build_run_config,
    locate_roots,
    select_root,
)
from transcert.expr.classify import classify
from transcert.expr.parser import parse_expr
from transcert.model.config import Command, RunConfig

COMMAND_NAME = str(Command.COMBINE)


def add_sub_commands(subparsers: argparse._SubParsersAction) -> None:
    """Adds the sub command options for the combine module"""
    combine_parser = subparsers.add_parser(
        COMMAND_NAME, help="Certify tau_1 + tau_2 i (or tau_1 - tau_2 i) from two certified real numbers."
    )
    combine_parser.add_argument(
        "first",
        help="tau_1: e, pi, f(a), sum of c*e^a, product of a^b or an equation (whose --root-index root is used)",
    )
    combine_parser.add_argument("second", help="tau_2: same forms as tau_1")
    combine_parser.add_argument(
        "--minus", required=False, action="store_true", help="Combine as tau_1 - tau_2 i instead."
    )
    add_equation_arguments(combine_parser, equation=False)
    add_root_selection_arguments(combine_parser, component=False)
    add_output_argument(combine_parser)


def operand_certificate(config: RunConfig, text: str) -> Certificate | None:
    """Equations are solved and their root certified (None if there is no root), anything else must be a
    certifiable constant"""
    if "=" not in text:
        return certify_number(parse_expr(text), config.prec)

    located = locate_roots(config, text)
    if not located.roots:
        return None
    form = classify(located.equation.lhs, located.equation.rhs)
    return certify(
        form,
        select_root(located, config.root_index),
        located.h,
        budget=config.budget,
        equation=located.equation,
        equation_text=located.text,
    )


def run_action(args: argparse.Namespace, console: Console) -> ExitCode:
    config = build_run_config(args, Command.COMBINE)
    first = operand_certificate(config, args.first)
    second = operand_certificate(config, args.second)
    if first is None or second is None:
        console.print("[yellow]An equation operand has no roots in the region[/yellow]")
        return ExitCode.NO_ROOTS
    certificate = combine_complex(first, second, sign=-1 if args.minus else 1)
    return print_certificate(console, certificate, config.output)
