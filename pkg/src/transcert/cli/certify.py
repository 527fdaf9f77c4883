import argparse

from rich.console import Console

from transcert.certify import certify
from transcert.certify.model import Certificate, Verdict
from transcert.cli.common import (
    ExitCode,
    add_equation_arguments,
    add_output_argument,
    add_root_selection_arguments,
    build_run_config,
    locate_roots,
    print_json,
    select_root,
)
from transcert.expr.classify import classify
from transcert.model.config import Command, OutputFormat
from transcert.results.console import render_certificate

COMMAND_NAME = str(Command.CERTIFY)


def add_sub_commands(subparsers: argparse._SubParsersAction) -> None:
    """Adds the sub command options for the certify module"""
    certify_parser = subparsers.add_parser(
        COMMAND_NAME, help="Locate a root of an equation and check it against the transcendence theorems."
    )
    add_equation_arguments(certify_parser)
    add_root_selection_arguments(certify_parser, component=False)
    certify_parser.add_argument(
        "--strict",
        required=False,
        action="store_true",
        help="Additionally require the exponent values of an exponential polynomial to be pairwise separated.",
    )
    add_output_argument(certify_parser)


def verdict_exit_code(certificate: Certificate) -> ExitCode:
    match certificate.verdict:
        case Verdict.CERTIFIED:
            return ExitCode.OK
        case Verdict.REFUSED:
            return ExitCode.REFUSED
    return ExitCode.UNDECIDED


def print_certificate(console: Console, certificate: Certificate, output: OutputFormat) -> ExitCode:
    if output == OutputFormat.JSON:
        print_json(console, certificate.to_json())
    else:
        render_certificate(console, certificate)
    return verdict_exit_code(certificate)


def run_action(args: argparse.Namespace, console: Console) -> ExitCode:
    config = build_run_config(args, Command.CERTIFY)
    located = locate_roots(config)
    if not located.roots:
        console.print(f"[yellow]No roots of {located.text} found - nothing to certify[/yellow]")
        return ExitCode.NO_ROOTS

    root = select_root(located, config.root_index)
    form = classify(located.equation.lhs, located.equation.rhs)
    certificate = certify(
        form,
        root,
        located.h,
        strict=config.strict,
        budget=config.budget,
        equation=located.equation,
        equation_text=located.text,
    )
    return print_certificate(console, certificate, config.output)
