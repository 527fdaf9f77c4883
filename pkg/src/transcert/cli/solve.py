import argparse
from typing import Any

from rich.console import Console

from transcert.cli.common import (
    ExitCode,
    LocatedRoots,
    add_equation_arguments,
    add_output_argument,
    build_run_config,
    locate_roots,
    print_json,
)
from transcert.constants import SCHEMA_VERSION
from transcert.expr.forms import equation_json
from transcert.model.config import Command, Domain, OutputFormat, RunConfig
from transcert.results.console import render_roots

COMMAND_NAME = str(Command.SOLVE)


def add_sub_commands(subparsers: argparse._SubParsersAction) -> None:
    """Adds the sub command options for the solve module"""
    solve_parser = subparsers.add_parser(COMMAND_NAME, help="Locate every root of an equation in a region.")
    add_equation_arguments(solve_parser)
    add_output_argument(solve_parser)


def region_text(config: RunConfig) -> str:
    """The searched region as exact comma separated rationals"""
    if config.domain == Domain.REAL and config.interval is not None:
        return f"{config.interval.lo},{config.interval.hi}"
    if config.minimal_modulus and config.r_max is not None:
        return f"|z| <= {config.r_max}"
    if config.region is not None:
        r = config.region
        return f"{r.re_lo},{r.re_hi},{r.im_lo},{r.im_hi}"
    return ""


def roots_json(config: RunConfig, located: LocatedRoots) -> dict[str, Any]:
    document: dict[str, Any] = {
        "schema": SCHEMA_VERSION,
        "equation": equation_json(located.equation, located.text),
        "domain": str(config.domain),
        "region": region_text(config),
        "roots": [root.to_json() for root in located.roots],
    }
    if config.domain == Domain.COMPLEX:
        document["minimal_modulus"] = config.minimal_modulus
        if config.r_max is not None:
            document["r_max"] = str(config.r_max)
        document["avoided"] = [f"{r.re_lo},{r.re_hi},{r.im_lo},{r.im_hi}" for r in located.avoided]
    return document


def run_action(args: argparse.Namespace, console: Console) -> ExitCode:
    config = build_run_config(args, Command.SOLVE)
    located = locate_roots(config)

    if config.output == OutputFormat.JSON:
        print_json(console, roots_json(config, located))
    else:
        render_roots(console, located.roots, located.text, located.avoided)
    return ExitCode.OK if located.roots else ExitCode.NO_ROOTS
