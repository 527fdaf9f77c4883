import argparse
import json
import logging
from dataclasses import dataclass, field
from enum import IntEnum
from fractions import Fraction
from typing import Any

from rich.console import Console

from transcert.arith.region import Interval, Rect
from transcert.constants import CLI_DEFAULT_PREC, MAX_BASE, MIN_BASE
from transcert.digits.stream import DigitStream
from transcert.error import ConfigError, UndecidedError
from transcert.expr.algebraic import AlgebraicNumber
from transcert.expr.parser import parse_equation, parse_expr
from transcert.expr.polynomial import fold_constant
from transcert.expr.tree import Equation, Expr
from transcert.model.config import Command, Domain, OutputFormat, RunConfig, load_budget
from transcert.rootfind.complex import minimal_modulus_root, search_complex_roots
from transcert.rootfind.model import RootEnclosure
from transcert.rootfind.newton import refine_root
from transcert.rootfind.real import isolate_real_roots

logger = logging.getLogger(__name__)


class ExitCode(IntEnum):
    OK = 0
    BAD_INPUT = 1  # Parse / flag errors
    NO_ROOTS = 2
    UNDECIDED = 3
    REFUSED = 4


def parse_rational(val: str) -> Fraction:
    """Parses an exact rational ("3", "-1/2", "0.25"). Raises ValueError if val isn't one"""
    try:
        return Fraction(val.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"'{val}' isn't a rational number") from exc


def parse_rationals(val: str) -> list[Fraction]:
    return [parse_rational(v) for v in val.split(",")]


def parse_interval(val: str) -> Interval:
    """'a,b' with a < b"""
    bounds = parse_rationals(val)
    if len(bounds) != 2 or bounds[0] >= bounds[1]:
        raise ValueError(f"'{val}' should be a,b with a < b")
    return Interval(bounds[0], bounds[1])


def parse_rect(val: str) -> Rect:
    """'re_min,re_max,im_min,im_max' with both ranges non empty"""
    bounds = parse_rationals(val)
    if len(bounds) != 4 or bounds[0] >= bounds[1] or bounds[2] >= bounds[3]:
        raise ValueError(f"'{val}' should be re_min,re_max,im_min,im_max with min < max")
    return Rect(*bounds)


def parse_algebraic(val: str) -> AlgebraicNumber:
    """An exact algebraic constant written as an expression (eg: 2, -1/3, sqrt(2), 1 + 2*sqrt(5))"""
    value = fold_constant(parse_expr(val))
    if value is None:
        raise ValueError(f"'{val}' isn't a supported algebraic constant")
    return value


def add_output_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--output",
        required=False,
        choices=[str(o) for o in OutputFormat],
        default=str(OutputFormat.TEXT),
        help="Render results as rich text (default) or as a JSON document.",
    )


def add_precision_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--prec",
        required=False,
        type=int,
        default=CLI_DEFAULT_PREC,
        metavar="BITS",
        help=f"Working precision. Reported root enclosures are at most 2^-BITS wide. Defaults to {CLI_DEFAULT_PREC}",
    )
    parser.add_argument(
        "--budget-file",
        required=False,
        help="Optional YAML file overriding the refinement / subdivision limits.",
    )


def add_equation_arguments(parser: argparse.ArgumentParser, equation: bool = True) -> None:
    """The arguments shared by every command that solves an equation"""
    if equation:
        parser.add_argument("equation", help="The equation to solve, eg: 'e^x + x - 12 = 0'")
    parser.add_argument(
        "--domain",
        required=False,
        choices=[str(d) for d in Domain],
        default=str(Domain.REAL),
        help="Search for real roots in an interval or complex roots in a rectangle.",
    )
    parser.add_argument(
        "--region",
        required=False,
        help="a,b for --domain real or re_min,re_max,im_min,im_max for --domain complex (exact rationals).",
    )
    parser.add_argument(
        "--minimal-modulus",
        required=False,
        action="store_true",
        help="With --domain complex: find the root(s) of least modulus within --rmax instead of searching --region",
    )
    parser.add_argument("--rmax", required=False, help="Radius bound for --minimal-modulus.")
    add_precision_arguments(parser)


def add_root_selection_arguments(parser: argparse.ArgumentParser, component: bool = True) -> None:
    parser.add_argument(
        "--root-index",
        required=False,
        type=int,
        default=0,
        help="Which root (of the list printed by solve) to use. Defaults to the first.",
    )
    if component:
        parser.add_argument(
            "--component",
            required=False,
            choices=["re", "im"],
            default="re",
            help="Which component of a complex root feeds the digits.",
        )


def add_stream_arguments(parser: argparse.ArgumentParser, base: bool = True) -> None:
    """Root selection plus the position (and base) of the digit stream"""
    add_root_selection_arguments(parser)
    if base:
        parser.add_argument(
            "--base",
            required=False,
            type=int,
            default=10,
            help=f"Digit base ({MIN_BASE}..{MAX_BASE}). Defaults to 10",
        )
    parser.add_argument(
        "--offset",
        required=False,
        type=int,
        default=0,
        help="Fractional digits to skip before the first digit used. Defaults to 0",
    )


def _arg(args: argparse.Namespace, name: str, default: Any = None) -> Any:
    return getattr(args, name, default)


def build_run_config(args: argparse.Namespace, command: Command, **overrides: Any) -> RunConfig:
    """Assembles (and validates) a RunConfig from parsed arguments. Raises ConfigError on any invalid flag"""
    domain = Domain(_arg(args, "domain", Domain.REAL))
    region_text: str | None = _arg(args, "region")
    interval: Interval | None = None
    rect: Rect | None = None
    r_max: Fraction | None = None
    try:
        if region_text is not None:
            if domain == Domain.REAL:
                interval = parse_interval(region_text)
            else:
                rect = parse_rect(region_text)
        if _arg(args, "rmax") is not None:
            r_max = parse_rational(args.rmax)
    except ValueError as exc:
        raise ConfigError(f"--region / --rmax: {exc}") from exc

    values: dict[str, Any] = {
        "command": command,
        "equation": _arg(args, "equation"),
        "domain": domain,
        "interval": interval,
        "region": rect,
        "minimal_modulus": bool(_arg(args, "minimal_modulus", False)),
        "r_max": r_max,
        "prec": _arg(args, "prec", CLI_DEFAULT_PREC),
        "strict": bool(_arg(args, "strict", False)),
        "root_index": _arg(args, "root_index", 0),
        "component": _arg(args, "component", "re"),
        "base": _arg(args, "base", 10),
        "offset": _arg(args, "offset", 0),
        "rows": _arg(args, "rows", 0),
        "cols": _arg(args, "cols", 0),
        "width": _arg(args, "width", 5),
        "tests": list(_arg(args, "tests", None) or []),
        "output": OutputFormat(_arg(args, "output", OutputFormat.TEXT)),
        "budget": load_budget(_arg(args, "budget_file")),
    }
    values.update(overrides)
    config = RunConfig(**values)

    error = config.get_validation_error()
    if error is not None:
        raise ConfigError(error)
    return config


@dataclass(frozen=True)
class LocatedRoots:
    """The roots of an equation (canonically sorted) refined to the requested precision"""

    text: str
    equation: Equation
    h: Expr
    roots: list[RootEnclosure]
    avoided: list[Rect] = field(default_factory=list)


def locate_roots(config: RunConfig, text: str | None = None) -> LocatedRoots:
    """Parses and solves the equation described by config. Raises ParseError / UndecidedError / NoRootWithin"""
    text = text if text is not None else config.equation
    if text is None:
        raise ConfigError("An equation is required")

    equation = parse_equation(text)
    h = equation.residual()
    avoided: list[Rect] = []
    if config.domain == Domain.REAL:
        if config.interval is None:
            raise ConfigError("--domain real requires an interval --region a,b")
        roots = isolate_real_roots(h, config.interval, config.prec, config.budget)
    elif config.minimal_modulus and config.r_max is not None:
        roots = minimal_modulus_root(h, config.r_max, config.prec, config.budget)
    else:
        if config.region is None:
            raise ConfigError("--domain complex requires a rectangular --region re_min,re_max,im_min,im_max")
        search = search_complex_roots(h, config.region, config.prec, budget=config.budget)
        if search.undecided:
            raise UndecidedError(
                f"{len(search.undecided)} region(s) of {search.region} undecided",
                regions=[str(r) for r in search.undecided],
                found=search.roots,
            )
        roots, avoided = search.roots, search.avoided

    refined = [refine_root(h, root, config.prec, config.budget) for root in roots]
    logger.info(f"Located {len(refined)} root(s) of {text}")
    return LocatedRoots(text, equation, h, refined, avoided)


def select_root(located: LocatedRoots, root_index: int) -> RootEnclosure:
    """Raises ConfigError if root_index is out of range (callers report an empty list as NO_ROOTS first)"""
    if root_index >= len(located.roots):
        raise ConfigError(f"--root-index {root_index} is out of range: only {len(located.roots)} root(s) found")
    return located.roots[root_index]


def digit_stream(config: RunConfig, located: LocatedRoots) -> DigitStream:
    """A stream over the selected root positioned at --offset"""
    root = select_root(located, config.root_index)
    stream = DigitStream.for_root(
        located.h,
        root,
        base=config.base,
        component=config.component,
        budget=config.budget,
        source=located.text,
        root_index=config.root_index,
    )
    return stream.with_base(config.base, config.offset)


def print_json(console: Console, document: dict[str, Any]) -> None:
    """Writes document verbatim (no highlighting / wrapping) so that identical runs are byte identical"""
    console.out(json.dumps(document, indent=2), highlight=False)
