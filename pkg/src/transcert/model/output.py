"""JSON records for the digit oriented commands (snake_case keys, top level records carry the schema version)"""

from dataclasses import dataclass, field
from enum import StrEnum

from dataclass_wizard import JSONWizard

from transcert.constants import SCHEMA_VERSION


class StatisticName(StrEnum):
    CHI2 = "chi2"  # Digit frequencies vs uniform
    SERIAL = "serial"  # Frequencies of non-overlapping digit pairs vs uniform
    RUNS = "runs"  # Runs above / below base / 2 vs the Wald-Wolfowitz normal approximation


@dataclass(frozen=True)
class StatResult(JSONWizard):
    class _(JSONWizard.Meta):
        key_transform_with_dump = "SNAKE"

    name: StatisticName
    statistic: float  # chi2: sum (O - E)^2 / E, runs: the number of runs
    p_value: float
    df: int | None = None  # Degrees of freedom (chi2 family only)
    z: float | None = None  # Normal score (runs only)
    note: str | None = None


@dataclass(frozen=True)
class StatsReport(JSONWizard):
    class _(JSONWizard.Meta):
        key_transform_with_dump = "SNAKE"

    base: int
    digit_count: int
    results: list[StatResult] = field(default_factory=list)
    schema: int = SCHEMA_VERSION

    def result(self, name: StatisticName) -> StatResult | None:
        return next((r for r in self.results if r.name == name), None)


@dataclass(frozen=True)
class DigitTable(JSONWizard):
    """rows x cols cells of width digits each, filled row major from a digit stream"""

    class _(JSONWizard.Meta):
        key_transform_with_dump = "SNAKE"

    base: int
    offset: int  # Stream position of the first digit
    width: int
    cells: list[list[str]]
    schema: int = SCHEMA_VERSION

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def cols(self) -> int:
        return len(self.cells[0]) if self.cells else 0

    def to_text(self) -> str:
        return "\n".join(" ".join(row) for row in self.cells)


@dataclass(frozen=True)
class DigitsOutput(JSONWizard):
    """Certified digits of one component of a root"""

    class _(JSONWizard.Meta):
        key_transform_with_dump = "SNAKE"

    base: int
    offset: int  # digits[0] is fractional digit number offset + 1
    sign: str  # "" or "-"
    integer_part: str
    digits: str
    source: str | None = None  # Equation text the root came from
    root_index: int | None = None
    component: str = "re"
    schema: int = SCHEMA_VERSION

    def to_text(self) -> str:
        if self.offset == 0:
            return f"{self.sign}{self.integer_part}.{self.digits}"
        return self.digits
