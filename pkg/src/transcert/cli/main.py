import argparse
import logging
import logging.config
import re
import sys
from typing import Any, NoReturn

from rich.console import Console
from rich.markup import escape

import transcert.cli.certify as certify
import transcert.cli.combine as combine
import transcert.cli.digits as digits
import transcert.cli.encrypt as encrypt
import transcert.cli.keygen as keygen
import transcert.cli.lw as lw
import transcert.cli.solve as solve
import transcert.cli.stats as stats
import transcert.cli.table as table
from transcert.cli.common import ExitCode
from transcert.error import (
    BoundaryUnresolved,
    BoundaryZero,
    ConfigError,
    InputNotCertified,
    NoRootWithin,
    TranscertError,
    UndecidedError,
)

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s %(funcName)s - %(message)s"


class ArgumentParser(argparse.ArgumentParser):
    """Raises ConfigError on bad flags (instead of exiting) so that run() stays in charge of the exit code"""

    def __init__(self, *args: Any, **kwargs: Any) -> None:
        super().__init__(*args, **kwargs)
        # Region bounds and coefficients like -10,10 or -1/2 are values, not flags
        self._negative_number_matcher = re.compile(r"^-\.?\d")

    def error(self, message: str) -> NoReturn:
        raise ConfigError(f"{self.prog}: {message}")


root_parser = ArgumentParser(
    prog="transcert", description="Certified roots, transcendence certificates and digit streams."
)
root_parser.add_argument(
    "-v", "--verbose", required=False, action="store_true", help="Log solver decisions (DEBUG) to stderr."
)
root_subparsers = root_parser.add_subparsers(dest="command", parser_class=ArgumentParser)

solve.add_sub_commands(root_subparsers)
certify.add_sub_commands(root_subparsers)
digits.add_sub_commands(root_subparsers)
table.add_sub_commands(root_subparsers)
keygen.add_sub_commands(root_subparsers)
stats.add_sub_commands(root_subparsers)
encrypt.add_sub_commands(root_subparsers)
lw.add_sub_commands(root_subparsers)
combine.add_sub_commands(root_subparsers)


def configure_logging(verbose: bool) -> None:
    """All logs go to stderr - stdout only ever carries results"""
    level = "DEBUG" if verbose else "WARNING"
    logging.config.dictConfig(
        {
            "version": 1,
            "disable_existing_loggers": False,
            "formatters": {
                "standard": {"format": LOG_FORMAT},
            },
            "handlers": {
                "stderr_handler": {
                    "class": "logging.StreamHandler",
                    "level": level,
                    "formatter": "standard",
                    "stream": "ext://sys.stderr",
                },
            },
            "root": {
                "level": level,
                "handlers": ["stderr_handler"],
            },
        }
    )


def exit_code_for(exc: TranscertError) -> ExitCode:
    """How a failure is reported to the shell"""
    match exc:
        case NoRootWithin():
            return ExitCode.NO_ROOTS
        case UndecidedError() | BoundaryZero() | BoundaryUnresolved():
            return ExitCode.UNDECIDED
        case InputNotCertified():
            return ExitCode.REFUSED
    return ExitCode.BAD_INPUT  # Parse, flag and input validation failures


def _dispatch(args: argparse.Namespace, console: Console) -> ExitCode:
    match args.command:
        case solve.COMMAND_NAME:
            return solve.run_action(args, console)
        case certify.COMMAND_NAME:
            return certify.run_action(args, console)
        case digits.COMMAND_NAME:
            return digits.run_action(args, console)
        case table.COMMAND_NAME:
            return table.run_action(args, console)
        case keygen.COMMAND_NAME:
            return keygen.run_action(args, console)
        case stats.COMMAND_NAME:
            return stats.run_action(args, console)
        case encrypt.COMMAND_NAME:
            return encrypt.run_action(args, console)
        case lw.COMMAND_NAME:
            return lw.run_action(args, console)
        case combine.COMMAND_NAME:
            return combine.run_action(args, console)
    root_parser.print_help(sys.stderr)
    return ExitCode.BAD_INPUT


def run(argv: list[str]) -> int:
    """Runs one subcommand. Results go to stdout, diagnostics to stderr. Returns the exit code"""
    console = Console()
    error_console = Console(stderr=True)

    try:
        args = root_parser.parse_args(argv)
    except ConfigError as exc:
        error_console.print(escape(str(exc)), style="red", highlight=False)
        return ExitCode.BAD_INPUT
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    configure_logging(bool(args.verbose))
    try:
        return _dispatch(args, console)
    except TranscertError as exc:
        code = exit_code_for(exc)
        error_console.print(f"[b]{type(exc).__name__}[/b]: {escape(str(exc))}", style="red", highlight=False)
        if isinstance(exc, UndecidedError):
            for region in exc.regions:
                error_console.print(f"  undecided: {escape(region)}", highlight=False)
        return code
    except ValueError as exc:
        error_console.print(f"[b]Invalid input[/b]: {escape(str(exc))}", style="red", highlight=False)
        return ExitCode.BAD_INPUT
    except Exception:
        logger.exception("Unexpected failure")
        error_console.print_exception()
        return ExitCode.BAD_INPUT


def cli_entrypoint() -> None:
    """Handle command line arguments - call out to the appropriate CLI sub command"""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    cli_entrypoint()  # This really only exists for debugging
