from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction
from pathlib import Path

from dataclass_wizard import YAMLWizard

from transcert.arith.region import Interval, Rect
from transcert.constants import CLI_DEFAULT_PREC, CLI_MIN_PREC, MAX_BASE, MIN_BASE
from transcert.error import ConfigError


class Command(StrEnum):
    SOLVE = "solve"
    CERTIFY = "certify"
    DIGITS = "digits"
    TABLE = "table"
    KEYGEN = "keygen"
    STATS = "stats"
    ENCRYPT = "encrypt"
    LW = "lw"
    COMBINE = "combine"


class Domain(StrEnum):
    REAL = "real"
    COMPLEX = "complex"


class OutputFormat(StrEnum):
    TEXT = "text"
    JSON = "json"


@dataclass(frozen=True)
class Budget(YAMLWizard):
    """Limits on every refinement / subdivision loop. Values can be overridden with a YAML file (--budget-file)"""

    refine_doublings: int = 16  # How many times a nonzero test may double its precision
    start_prec: int = 64  # Precision (bits) that solvers start at
    max_prec: int = 4096  # Solvers give up (Undecided) rather than exceed this precision
    max_bits: int = 2**20  # Hard ceiling for nonzero / digit refinement
    real_depth: int = 40  # Bisection depth for real root isolation
    complex_depth: int = 20  # Quadrisection depth for complex root search
    segment_depth: int = 24  # Bisection depth of a single contour segment
    perturb_retries: int = 8  # Attempts at perturbing a region whose boundary touches a zero
    newton_iterations: int = 64  # Iterations per interval Newton refinement
    cut_depth: int = 6  # Quadrisection depth before a region touching a branch cut is reported as avoided

    def get_validation_error(self) -> str | None:
        """Returns a human readable error if these limits can't be used (or None if they are fine)"""
        for name in (
            "refine_doublings",
            "real_depth",
            "complex_depth",
            "segment_depth",
            "perturb_retries",
            "newton_iterations",
            "cut_depth",
        ):
            if getattr(self, name) < 0:
                return f"{name} must be non negative"
        if self.start_prec < CLI_MIN_PREC:
            return f"start_prec must be at least {CLI_MIN_PREC}"
        if self.max_prec < self.start_prec:
            return "max_prec must be at least start_prec"
        if self.max_bits < self.max_prec:
            return "max_bits must be at least max_prec"
        return None


DEFAULT_BUDGET = Budget()


def load_budget(path: Path | str | None) -> Budget:
    """Reads a (partial) budget override file. None returns the defaults. Raises ConfigError on failure"""
    if path is None:
        return DEFAULT_BUDGET

    try:
        budget = Budget.from_yaml_file(Path(path))
    except Exception as exc:
        raise ConfigError(f"Error reading budget file {path}: {exc}") from exc

    if not isinstance(budget, Budget):
        raise ConfigError(f"Received an invalid type for budget: {type(budget)}. Expected a single YAML mapping.")

    error = budget.get_validation_error()
    if error is not None:
        raise ConfigError(f"Invalid budget file {path}: {error}")
    return budget


@dataclass(frozen=True)
class RunConfig:
    """Represents the config for a particular run (parsed from the CLI)"""

    command: Command
    equation: str | None = None  # Equation source text (commands that solve something)
    domain: Domain = Domain.REAL
    interval: Interval | None = None  # Real search interval
    region: Rect | None = None  # Complex search rectangle
    minimal_modulus: bool = False  # Complex search for the root(s) of least modulus instead of a region
    r_max: Fraction | None = None  # Radius bound for the minimal modulus search
    prec: int = CLI_DEFAULT_PREC
    strict: bool = False  # Adds the exponent separation check to Thm2 certificates
    root_index: int = 0  # Which root (of the canonically sorted list) feeds certify / digit commands
    component: str = "re"  # Which component of a complex root feeds digit commands
    base: int = 10
    count: int = 0  # digits: how many digits, keygen: how many bytes, stats: how many digits
    offset: int = 0
    rows: int = 0
    cols: int = 0
    width: int = 5  # Digits per table cell
    tests: list[str] = field(default_factory=list)  # stats: which statistics to compute
    output: OutputFormat = OutputFormat.TEXT
    budget: Budget = DEFAULT_BUDGET

    def get_validation_error(self) -> str | None:
        """Returns a human readable error if this config can't be run (or None if it's valid)"""
        if self.prec < CLI_MIN_PREC:
            return f"--prec must be at least {CLI_MIN_PREC} (got {self.prec})"
        if not MIN_BASE <= self.base <= MAX_BASE:
            return f"--base must be between {MIN_BASE} and {MAX_BASE} (got {self.base})"
        if self.root_index < 0:
            return "--root-index must be non negative"
        if self.offset < 0:
            return "--offset must be non negative"
        if self.component not in ("re", "im"):
            return f"--component must be 're' or 'im' (got {self.component})"

        if self.domain == Domain.COMPLEX:
            if self.minimal_modulus:
                if self.r_max is None or self.r_max <= 0:
                    return "--minimal-modulus requires a positive --rmax"
            elif self.region is None and self.command != Command.LW:
                return "--domain complex requires a rectangular --region re_min,re_max,im_min,im_max"
        elif self.equation is not None and self.interval is None:
            return "--domain real requires an interval --region a,b"

        if self.command in (Command.DIGITS, Command.KEYGEN, Command.STATS) and self.count < 1:
            return f"{self.command} needs a positive count"
        if self.command == Command.TABLE and (self.rows < 1 or self.cols < 1 or self.width < 1):
            return "table needs positive --rows, --cols and --width"
        return None
